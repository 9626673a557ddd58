//! Exact rational linear algebra: matrices, subspaces, polynomials and the
//! Jordan-Chevalley split of a quasi-unipotent operator.

mod matrix;
mod poly;
mod subspace;

use std::collections::BTreeMap;

use thiserror::Error;

pub use matrix::{format_rational, parse_rational, q, qf, Echelon, RationalMatrix, Q};
pub use poly::{char_poly, cyclotomic, euler_phi, reduce_order, Poly};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{rows}x{cols} matrix cannot hold {entries} entries")]
    Shape {
        rows: usize,
        cols: usize,
        entries: usize,
    },
    #[error("expected a square matrix, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("characteristic polynomial has a factor that is not cyclotomic: {0}")]
    NotQuasiUnipotent(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// Jordan block sizes of a nilpotent matrix, largest first.
///
/// With `r_k = rank(n^k)`, the number of blocks of size at least `k` is
/// `r_{k-1} - r_k`.
pub fn nilpotent_partition(n: &RationalMatrix) -> Result<Vec<usize>, LinalgError> {
    if !n.is_square() {
        return Err(LinalgError::NotSquare(n.rows(), n.cols()));
    }
    let dim = n.rows();
    let mut ranks = vec![dim];
    let mut power = RationalMatrix::identity(dim);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > dim {
            return Err(LinalgError::NotNilpotent);
        }
        power = &power * n;
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            return Err(LinalgError::NotNilpotent);
        }
        ranks.push(r);
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, exactly));
    }
    Ok(parts)
}

/// `T = T^ss T^un` with `N = log T^un`.
#[derive(Clone, Debug)]
pub struct QuasiUnipotentSplit {
    pub semisimple: RationalMatrix,
    pub unipotent: RationalMatrix,
    pub log: RationalMatrix,
    /// Cyclotomic order `d` to the multiplicity of `Phi_d` in the
    /// characteristic polynomial.
    pub orders: BTreeMap<u64, usize>,
}

impl QuasiUnipotentSplit {
    /// Order of the semisimple part: the lcm of the cyclotomic orders.
    pub fn semisimple_order(&self) -> u64 {
        use num_integer::Integer;
        self.orders.keys().fold(1, |acc, d| acc.lcm(d))
    }
}

/// Factors a characteristic polynomial into cyclotomic polynomials.
pub fn cyclotomic_factorization(p: &Poly) -> Result<BTreeMap<u64, usize>, LinalgError> {
    let mut rest = p.clone();
    let mut orders = BTreeMap::new();
    let n = p.degree().unwrap_or(0) as u64;
    // phi(d) >= sqrt(d/2), so no order above 2n^2 can divide.
    let bound = 2 * n * n + 2;
    for d in 1..=bound {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        if euler_phi(d) > rest.degree().unwrap() as u64 {
            continue;
        }
        let phi = cyclotomic(d);
        loop {
            let (quot, rem) = rest.div_rem(&phi);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            *orders.entry(d).or_insert(0) += 1;
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let shown: Vec<String> = rest.coeffs().iter().map(format_rational).collect();
        return Err(LinalgError::NotQuasiUnipotent(format!(
            "leftover coefficients [{}]",
            shown.join(", ")
        )));
    }
    Ok(orders)
}

/// Jordan-Chevalley decomposition of a quasi-unipotent matrix.
///
/// The semisimple part comes from Newton iteration on the squarefree part
/// `f` of the characteristic polynomial, `S <- S - f(S) f'(S)^{-1}`, which
/// stays inside `Q[T]` and stops after finitely many steps.
pub fn quasi_unipotent_split(t: &RationalMatrix) -> Result<QuasiUnipotentSplit, LinalgError> {
    if !t.is_square() {
        return Err(LinalgError::NotSquare(t.rows(), t.cols()));
    }
    let n = t.rows();
    let orders = cyclotomic_factorization(&char_poly(t))?;
    let f = orders
        .keys()
        .fold(Poly::one(), |acc, &d| acc.mul(&cyclotomic(d)));
    let df = f.derivative();
    let mut s = t.clone();
    loop {
        let fs = f.eval_matrix(&s);
        if fs.is_zero() {
            break;
        }
        let step = &fs * &df.eval_matrix(&s).inverse()?;
        s = &s - &step;
    }
    let unipotent = if n == 0 {
        RationalMatrix::identity(0)
    } else {
        &s.inverse()? * t
    };
    let log = unipotent.log_unipotent();
    Ok(QuasiUnipotentSplit {
        semisimple: s,
        unipotent,
        log,
        orders,
    })
}

/// Companion matrix of a monic polynomial (last column holds `-c_i`).
pub fn companion(p: &Poly) -> RationalMatrix {
    let deg = p.degree().expect("companion of zero polynomial");
    let lead = p.coeffs()[deg].clone();
    let mut m = RationalMatrix::zeros(deg, deg);
    for i in 1..deg {
        m[(i, i - 1)] = q(1);
    }
    for i in 0..deg {
        m[(i, deg - 1)] = -(&p.coeffs()[i] / &lead);
    }
    m
}
