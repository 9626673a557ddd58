//! Perverse sheaves on a disk as quiver data `(psi, phi, can, var, T)`.
//!
//! Conventions: `var` is stored untwisted (the `(-1)` on its target is a
//! label only), and the dual of a representation uses
//! `can' = var^T`, `var' = -can^T`, `T' = T^{-T}`. The sign keeps
//! `var' can' = log T'^un`, since `log (T^{-T})^un = -N^T`.
//!
//! On the unipotent part the pair `(can, var)` is an odd nilpotent operator
//! `S` on `psi (+) phi`, and indecomposables are its graded Jordan chains:
//!
//! | top of chain | length   | summand |
//! |--------------|----------|---------|
//! | psi          | `2i - 1` | C(i)    |
//! | psi          | `2i`     | B(i)    |
//! | phi          | `2i`     | A(i)    |
//! | phi          | `2i + 1` | D(i)    |
//!
//! Non-unipotent summands are type E, counted in complex lines: one rational
//! block `Q[x]/Phi_d(x)^i` contributes `phi(d)` copies of `E(i, d)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hodge::{HodgeDeligneDiagram, LmhsSpec};
use crate::ratlin::{
    companion, cyclotomic, euler_phi, q, quasi_unipotent_split, LinalgError, Poly, RationalMatrix,
    Subspace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("representation violates: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("not self-dual: A({size}) appears {a} times but B({size}) appears {b} times")]
    NotSelfDual { size: u32, a: u64, b: u64 },
    #[error("E({size}, d={order}) count {count} is not a multiple of phi(d) = {phi}; no rational form")]
    NotRational {
        size: u32,
        order: u64,
        count: u64,
        phi: u64,
    },
    #[error("invalid summand {0}")]
    BadSummand(IndecompSummand),
}

/// A failed identity in [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.identity, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiskQuiverRep {
    pub t_psi: RationalMatrix,
    pub t_phi: RationalMatrix,
    /// `phi x psi`.
    pub can: RationalMatrix,
    /// `psi x phi`.
    pub var: RationalMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndecompSummand {
    pub family: Family,
    pub size: u32,
    #[serde(default = "one")]
    pub order: u64,
}

fn one() -> u64 {
    1
}

impl IndecompSummand {
    pub fn a(i: u32) -> Self {
        Self::unipotent(Family::A, i)
    }
    pub fn b(i: u32) -> Self {
        Self::unipotent(Family::B, i)
    }
    pub fn c(i: u32) -> Self {
        Self::unipotent(Family::C, i)
    }
    pub fn d(i: u32) -> Self {
        Self::unipotent(Family::D, i)
    }
    pub fn e(i: u32, order: u64) -> Self {
        IndecompSummand {
            family: Family::E,
            size: i,
            order,
        }
    }

    fn unipotent(family: Family, size: u32) -> Self {
        IndecompSummand {
            family,
            size,
            order: 1,
        }
    }

    fn is_valid(&self) -> bool {
        match self.family {
            Family::D => self.order == 1,
            Family::E => self.size >= 1 && self.order > 1,
            _ => self.size >= 1 && self.order == 1,
        }
    }

    /// `(dim psi, dim phi)` of one copy (one complex line for E).
    pub fn dims(&self) -> (usize, usize) {
        let i = self.size as usize;
        match self.family {
            Family::A | Family::B | Family::E => (i, i),
            Family::C => (i, i - 1),
            Family::D => (i, i + 1),
        }
    }

    /// Image under duality: A and B swap.
    pub fn dual(&self) -> Self {
        let family = match self.family {
            Family::A => Family::B,
            Family::B => Family::A,
            f => f,
        };
        IndecompSummand { family, ..*self }
    }

    /// Graded chain shape `(top in phi, length)` of a unipotent summand.
    fn chain(&self) -> (bool, usize) {
        let i = self.size as usize;
        match self.family {
            Family::C => (false, 2 * i - 1),
            Family::B => (false, 2 * i),
            Family::A => (true, 2 * i),
            Family::D => (true, 2 * i + 1),
            Family::E => unreachable!("type E has no chain"),
        }
    }
}

impl fmt::Display for IndecompSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::E => write!(f, "E({}, d={})", self.size, self.order),
            fam => write!(f, "{fam:?}({})", self.size),
        }
    }
}

/// Summand multiplicities (type E counted in complex lines).
pub type SummandMultiset = BTreeMap<IndecompSummand, u64>;

/// `C(2) + D(0)x3`, or `0` for the empty multiset.
pub fn format_multiset(m: &SummandMultiset) -> String {
    let parts: Vec<String> = m
        .iter()
        .filter(|(_, &k)| k > 0)
        .map(|(s, &k)| if k == 1 { s.to_string() } else { format!("{s}x{k}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Multiset after duality.
pub fn dual_multiset(m: &SummandMultiset) -> SummandMultiset {
    let mut out = SummandMultiset::new();
    for (s, &k) in m {
        *out.entry(s.dual()).or_insert(0) += k;
    }
    out
}

/// Linear map `map` restricted to `dom -> cod`, in their bases.
fn restrict(map: &RationalMatrix, dom: &Subspace, cod: &Subspace) -> RationalMatrix {
    let images = map * &dom.basis_matrix();
    cod.basis_matrix()
        .solve(&images)
        .expect("shapes agree")
        .expect("map preserves the subspace")
}

/// Matrix whose kernel is exactly `sub`.
fn quotient_map(sub: &Subspace) -> RationalMatrix {
    let ann = sub.basis_matrix().transpose().kernel();
    RationalMatrix::from_columns(sub.ambient(), ann.basis()).transpose()
}

fn generalized_kernel(p: &Poly, t: &RationalMatrix) -> Subspace {
    p.eval_matrix(t).pow(t.rows().max(1) as u32).kernel()
}

/// The unipotent part of a representation in adapted bases.
#[derive(Clone, Debug)]
pub struct UnipotentPart {
    pub psi: Subspace,
    pub phi: Subspace,
    pub can: RationalMatrix,
    pub var: RationalMatrix,
}

impl UnipotentPart {
    pub fn n(&self) -> RationalMatrix {
        &self.var * &self.can
    }
}

impl DiskQuiverRep {
    pub fn zero() -> Self {
        DiskQuiverRep {
            t_psi: RationalMatrix::identity(0),
            t_phi: RationalMatrix::identity(0),
            can: RationalMatrix::zeros(0, 0),
            var: RationalMatrix::zeros(0, 0),
        }
    }

    pub fn psi_dim(&self) -> usize {
        self.t_psi.rows()
    }

    pub fn phi_dim(&self) -> usize {
        self.t_phi.rows()
    }

    pub fn unipotent_part(&self) -> UnipotentPart {
        let x_minus_one = cyclotomic(1);
        let psi = generalized_kernel(&x_minus_one, &self.t_psi);
        let phi = generalized_kernel(&x_minus_one, &self.t_phi);
        let can = restrict(&self.can, &psi, &phi);
        let var = restrict(&self.var, &phi, &psi);
        UnipotentPart { psi, phi, can, var }
    }

    /// Direct sum of representations.
    pub fn direct_sum(parts: &[DiskQuiverRep]) -> Self {
        let cat = |f: fn(&DiskQuiverRep) -> &RationalMatrix| {
            RationalMatrix::block_diag(&parts.iter().map(|p| f(p).clone()).collect::<Vec<_>>())
        };
        DiskQuiverRep {
            t_psi: cat(|r| &r.t_psi),
            t_phi: cat(|r| &r.t_phi),
            can: cat(|r| &r.can),
            var: cat(|r| &r.var),
        }
    }

    /// Transport along invertible `p` on psi and `r` on phi.
    pub fn change_basis(&self, p: &RationalMatrix, r: &RationalMatrix) -> Result<Self, QuiverError> {
        let pi = p.inverse()?;
        let ri = r.inverse()?;
        Ok(DiskQuiverRep {
            t_psi: &(p * &self.t_psi) * &pi,
            t_phi: &(r * &self.t_phi) * &ri,
            can: &(r * &self.can) * &pi,
            var: &(p * &self.var) * &ri,
        })
    }
}

/// Checks every structural identity; an empty list means valid.
pub fn validate(rep: &DiskQuiverRep) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push = |identity, detail: String| out.push(Violation { identity, detail });
    let (a, b) = (rep.t_psi.rows(), rep.t_phi.rows());
    if !rep.t_psi.is_square() || !rep.t_phi.is_square() {
        push("T square", format!("T_psi {:?}, T_phi {:?}", (rep.t_psi.rows(), rep.t_psi.cols()), (rep.t_phi.rows(), rep.t_phi.cols())));
        return out;
    }
    if (rep.can.rows(), rep.can.cols()) != (b, a) || (rep.var.rows(), rep.var.cols()) != (a, b) {
        push(
            "map shapes",
            format!(
                "can is {}x{}, var is {}x{}, expected {b}x{a} and {a}x{b}",
                rep.can.rows(),
                rep.can.cols(),
                rep.var.rows(),
                rep.var.cols()
            ),
        );
        return out;
    }
    let split_psi = quasi_unipotent_split(&rep.t_psi);
    let split_phi = quasi_unipotent_split(&rep.t_phi);
    for (name, s) in [("T_psi quasi-unipotent", &split_psi), ("T_phi quasi-unipotent", &split_phi)] {
        if let Err(e) = s {
            push(name, e.to_string());
        }
    }
    let (Ok(split_psi), Ok(split_phi)) = (split_psi, split_phi) else {
        return out;
    };
    if &rep.can * &rep.t_psi != &rep.t_phi * &rep.can {
        push("can T_psi = T_phi can", "matrices differ".into());
        return out;
    }
    if &rep.var * &rep.t_phi != &rep.t_psi * &rep.var {
        push("var T_phi = T_psi var", "matrices differ".into());
        return out;
    }
    let u = rep.unipotent_part();
    let bpsi = u.psi.basis_matrix();
    if &(&rep.var * &rep.can) * &bpsi != &split_psi.log * &bpsi {
        push("var can = N on unipotent psi", "var can differs from log T_psi^un".into());
    }
    let bphi = u.phi.basis_matrix();
    if &(&rep.can * &rep.var) * &bphi != &split_phi.log * &bphi {
        push("can var = N on unipotent phi", "can var differs from log T_phi^un".into());
    }
    for &d in split_psi.orders.keys().filter(|&&d| d > 1) {
        let w = generalized_kernel(&cyclotomic(d), &rep.t_psi);
        let vc = restrict(&(&rep.var * &rep.can), &w, &w);
        if vc.rank() != w.dim() {
            push("var can invertible off the unipotent part", format!("singular on the Phi_{d} part"));
        }
    }
    out
}

fn require_valid(rep: &DiskQuiverRep) -> Result<(), QuiverError> {
    let v = validate(rep);
    if v.is_empty() {
        Ok(())
    } else {
        Err(QuiverError::Invalid(v))
    }
}

/// `Im can (+) Ker var = phi`.
pub fn decomposes(rep: &DiskQuiverRep) -> bool {
    let im_can = rep.can.image();
    let ker_var = rep.var.kernel();
    im_can.dim() + ker_var.dim() == rep.phi_dim()
        && im_can.intersect(&ker_var).expect("same ambient").is_zero()
}

/// `(dim H^{-1} i^*, dim H^0 i^*)` = `(dim ker can, dim coker can)` on the
/// unipotent parts.
pub fn stalk(rep: &DiskQuiverRep) -> (usize, usize) {
    let u = rep.unipotent_part();
    let r = u.can.rank();
    (u.psi.dim() - r, u.phi.dim() - r)
}

/// `(dim H^0 i^!, dim H^1 i^!)` = `(dim ker var, dim coker var)` on the
/// unipotent parts.
pub fn costalk(rep: &DiskQuiverRep) -> (usize, usize) {
    let u = rep.unipotent_part();
    let r = u.var.rank();
    (u.phi.dim() - r, u.psi.dim() - r)
}

/// `ker(can|psi^u) = ker N`.
pub fn local_invariant_cycle(rep: &DiskQuiverRep) -> bool {
    let u = rep.unipotent_part();
    u.can.kernel() == u.n().kernel()
}

/// One object of the nearby/vanishing sequence and whether it is exact there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsSlot {
    pub term: &'static str,
    /// Tate twist label `m` in `(-m)`.
    pub twist: i64,
    pub dim: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsSequence {
    /// `0 -> H^{-1}i^* -> psi -N-> psi(-1) -> H^1 i^! -> 0`.
    pub odd: Vec<CsSlot>,
    /// `0 -> H^0 i^! -> H^0 i^* -> 0`.
    pub even: Vec<CsSlot>,
}

impl CsSequence {
    pub fn exact(&self) -> bool {
        self.odd.iter().chain(&self.even).all(|s| s.exact)
    }
}

/// Exactness of `0 -> V_0 -f_0-> V_1 -> ... -> V_m -> 0` at every `V_i`.
fn exact_at_each(dims: &[usize], maps: &[RationalMatrix]) -> Vec<bool> {
    (0..dims.len())
        .map(|i| {
            let incoming = if i == 0 {
                Subspace::zero(dims[0])
            } else {
                maps[i - 1].image()
            };
            let outgoing = if i == dims.len() - 1 {
                Subspace::full(dims[i])
            } else {
                maps[i].kernel()
            };
            incoming == outgoing
        })
        .collect()
}

/// The sequence of stalks, costalks and nearby cycles, with exactness
/// decided by subspace comparisons.
pub fn cs_sequence(rep: &DiskQuiverRep) -> CsSequence {
    let u = rep.unipotent_part();
    let n = u.n();
    let ker_can = u.can.kernel();
    let incl = ker_can.basis_matrix();
    let to_coker_var = quotient_map(&u.var.image());
    let dims = [ker_can.dim(), u.psi.dim(), u.psi.dim(), to_coker_var.rows()];
    let flags = exact_at_each(&dims, &[incl, n, to_coker_var]);
    let names = [("H^-1 i*", 0), ("psi", 0), ("psi", 1), ("H^1 i!", 1)];
    let odd = names
        .iter()
        .zip(dims.iter().zip(flags))
        .map(|(&(term, twist), (&dim, exact))| CsSlot { term, twist, dim, exact })
        .collect();

    let ker_var = u.var.kernel();
    let to_coker_can = quotient_map(&u.can.image());
    let map = &to_coker_can * &ker_var.basis_matrix();
    let dims = [ker_var.dim(), to_coker_can.rows()];
    let flags = exact_at_each(&dims, &[map]);
    let even = [("H^0 i!", 0), ("H^0 i*", 0)]
        .iter()
        .zip(dims.iter().zip(flags))
        .map(|(&(term, twist), (&dim, exact))| CsSlot { term, twist, dim, exact })
        .collect();
    CsSequence { odd, even }
}

pub fn dualize(rep: &DiskQuiverRep) -> Result<DiskQuiverRep, QuiverError> {
    Ok(DiskQuiverRep {
        t_psi: rep.t_psi.inverse()?.transpose(),
        t_phi: rep.t_phi.inverse()?.transpose(),
        can: rep.var.transpose(),
        var: -&rep.can.transpose(),
    })
}

/// Number of graded Jordan chains of `s` of length exactly `len` whose top
/// lies in the coordinate block `part`, given `kers[j] = ker s^j`.
fn chains_with_top(kers: &[Subspace], part: &Subspace, len: usize, im_s: &Subspace) -> usize {
    let k_len = kers[len].intersect(part).expect("ambient");
    let k_prev = kers[len - 1].intersect(part).expect("ambient");
    let from_image = im_s.intersect(&k_len).expect("ambient");
    k_len.dim() - k_prev.sum(&from_image).expect("ambient").dim()
}

/// Indecomposable summands with multiplicities.
pub fn decompose_indecomposables(rep: &DiskQuiverRep) -> Result<SummandMultiset, QuiverError> {
    require_valid(rep)?;
    let mut out = SummandMultiset::new();
    let u = rep.unipotent_part();
    let (a, b) = (u.psi.dim(), u.phi.dim());
    if a + b > 0 {
        let mut s = RationalMatrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..b {
                s[(i, a + j)] = u.var[(i, j)].clone();
            }
        }
        for i in 0..b {
            for j in 0..a {
                s[(a + i, j)] = u.can[(i, j)].clone();
            }
        }
        let unit = |k: usize| {
            let mut v = vec![q(0); a + b];
            v[k] = q(1);
            v
        };
        let psi_block = Subspace::span(a + b, &(0..a).map(unit).collect::<Vec<_>>());
        let phi_block = Subspace::span(a + b, &(a..a + b).map(unit).collect::<Vec<_>>());
        let im_s = s.image();
        // s is nilpotent, so the kernels of its powers reach everything.
        let mut kers = vec![Subspace::zero(a + b)];
        let mut power = RationalMatrix::identity(a + b);
        while kers.last().unwrap().dim() < a + b {
            power = &power * &s;
            kers.push(power.kernel());
        }
        for len in 1..kers.len() {
            for (top_phi, block) in [(false, &psi_block), (true, &phi_block)] {
                let count = chains_with_top(&kers, block, len, &im_s);
                if count == 0 {
                    continue;
                }
                let len = len as u32;
                let summand = match (top_phi, len % 2) {
                    (false, 1) => IndecompSummand::c(len.div_ceil(2)),
                    (false, _) => IndecompSummand::b(len / 2),
                    (true, 0) => IndecompSummand::a(len / 2),
                    (true, _) => IndecompSummand::d(len / 2),
                };
                *out.entry(summand).or_insert(0) += count as u64;
            }
        }
    }
    let split = quasi_unipotent_split(&rep.t_psi)?;
    for &d in split.orders.keys().filter(|&&d| d > 1) {
        let phi_d = cyclotomic(d);
        let w = generalized_kernel(&phi_d, &rep.t_psi);
        let t = restrict(&rep.t_psi, &w, &w);
        let f = phi_d.eval_matrix(&t);
        let deg = euler_phi(d) as usize;
        let mut ranks = vec![w.dim()];
        while *ranks.last().unwrap() > 0 {
            ranks.push(f.pow(ranks.len() as u32).rank());
        }
        let at_least: Vec<usize> = ranks.windows(2).map(|r| (r[0] - r[1]) / deg).collect();
        for (k, &m) in at_least.iter().enumerate() {
            let exactly = m - at_least.get(k + 1).copied().unwrap_or(0);
            if exactly > 0 {
                let e = IndecompSummand::e(k as u32 + 1, d);
                *out.entry(e).or_insert(0) += (exactly * deg) as u64;
            }
        }
    }
    Ok(out)
}

/// Normal form of one unipotent summand, or of one rational E block
/// (`phi(d)` complex copies).
pub fn normal_form(s: IndecompSummand) -> Result<DiskQuiverRep, QuiverError> {
    if !s.is_valid() {
        return Err(QuiverError::BadSummand(s));
    }
    if s.family == Family::E {
        let t = companion(&cyclotomic(s.order).pow(s.size as usize));
        let n = t.rows();
        return Ok(DiskQuiverRep {
            t_psi: t.clone(),
            t_phi: t.clone(),
            can: RationalMatrix::identity(n),
            var: &t - &RationalMatrix::identity(n),
        });
    }
    // Chain v_0 -> v_1 -> ... alternating between psi and phi.
    let (top_phi, len) = s.chain();
    let in_phi = |j: usize| j.is_multiple_of(2) == top_phi;
    let psi_idx: Vec<usize> = (0..len).filter(|&j| !in_phi(j)).collect();
    let phi_idx: Vec<usize> = (0..len).filter(|&j| in_phi(j)).collect();
    let pos = |list: &[usize], j: usize| list.iter().position(|&x| x == j).unwrap();
    let mut can = RationalMatrix::zeros(phi_idx.len(), psi_idx.len());
    let mut var = RationalMatrix::zeros(psi_idx.len(), phi_idx.len());
    for j in 0..len.saturating_sub(1) {
        if in_phi(j) {
            var[(pos(&psi_idx, j + 1), pos(&phi_idx, j))] = q(1);
        } else {
            can[(pos(&phi_idx, j + 1), pos(&psi_idx, j))] = q(1);
        }
    }
    Ok(DiskQuiverRep {
        t_psi: (&var * &can).exp_nilpotent(),
        t_phi: (&can * &var).exp_nilpotent(),
        can,
        var,
    })
}

/// Direct sum of normal forms realizing a multiset. E counts must be
/// multiples of `phi(d)`.
pub fn construct(m: &SummandMultiset) -> Result<DiskQuiverRep, QuiverError> {
    let mut parts = Vec::new();
    for (&s, &k) in m {
        let copies = if s.family == Family::E {
            let phi = euler_phi(s.order);
            if k % phi != 0 {
                return Err(QuiverError::NotRational {
                    size: s.size,
                    order: s.order,
                    count: k,
                    phi,
                });
            }
            k / phi
        } else {
            k
        };
        let block = normal_form(s)?;
        parts.extend(std::iter::repeat_n(block, copies as usize));
    }
    Ok(DiskQuiverRep::direct_sum(&parts))
}

/// Verdicts whose agreement is asserted for self-dual representations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub decomposes: bool,
    pub cs_exact: bool,
    pub local_invariant_cycle: bool,
}

impl VerdictReport {
    pub fn consistent(&self) -> bool {
        self.decomposes == self.cs_exact && self.cs_exact == self.local_invariant_cycle
    }
}

pub fn is_self_dual(m: &SummandMultiset) -> Result<(), QuiverError> {
    for (s, &k) in m.iter().filter(|(s, _)| s.family == Family::A) {
        let b = m.get(&s.dual()).copied().unwrap_or(0);
        if b != k {
            return Err(QuiverError::NotSelfDual { size: s.size, a: k, b });
        }
    }
    for (s, &k) in m.iter().filter(|(s, _)| s.family == Family::B) {
        if !m.contains_key(&s.dual()) {
            return Err(QuiverError::NotSelfDual { size: s.size, a: 0, b: k });
        }
    }
    Ok(())
}

pub fn verdict_check(rep: &DiskQuiverRep) -> Result<VerdictReport, QuiverError> {
    is_self_dual(&decompose_indecomposables(rep)?)?;
    Ok(VerdictReport {
        decomposes: decomposes(rep),
        cs_exact: cs_sequence(rep).exact(),
        local_invariant_cycle: local_invariant_cycle(rep),
    })
}

/// Summands read off a string model: unipotent strings give C blocks,
/// the others E blocks, phantom classes skyscrapers.
pub fn realize_multiset(spec: &LmhsSpec, phantom: &HodgeDeligneDiagram) -> SummandMultiset {
    let mut m = SummandMultiset::new();
    for s in spec.strings() {
        let summand = if s.is_unipotent() {
            IndecompSummand::c(s.length)
        } else {
            IndecompSummand::e(s.length, s.order)
        };
        *m.entry(summand).or_insert(0) += s.mult;
    }
    if phantom.mass() > 0 {
        *m.entry(IndecompSummand::d(0)).or_insert(0) += phantom.mass();
    }
    m
}

/// Matrix realization of a string model plus phantom skyscrapers.
///
/// Fails only when the non-unipotent strings admit no rational form.
pub fn realize(spec: &LmhsSpec, phantom: &HodgeDeligneDiagram) -> Result<DiskQuiverRep, QuiverError> {
    construct(&realize_multiset(spec, phantom))
}
