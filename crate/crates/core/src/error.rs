//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The algebra is split (discriminant 1): it is M2(Q), not a division algebra.
    #[error("split algebra: every finite Hilbert symbol is +1, so B = M2(Q)")]
    SplitAlgebra,

    /// The algebra is definite (ramified at the real place): a < 0 and b < 0.
    #[error("definite algebra: a < 0 and b < 0, so B does not split over R")]
    DefiniteAlgebra,

    /// The four supplied elements do not span a rank-4 lattice.
    #[error("order basis is rank deficient")]
    RankDeficient,

    /// A product of basis elements leaves the lattice (or 1 is not in it).
    #[error("lattice is not a unital subring: {0}")]
    NotClosed(String),

    /// An element has non-integral reduced trace or norm.
    #[error("element is not integral: {0}")]
    NotIntegral(String),

    /// Saturation could not enlarge a non-maximal order.
    #[error("saturation stuck at reduced discriminant {0}")]
    SaturationStuck(u64),

    /// The mu-search box was exhausted without a solution.
    #[error("mu-search exhausted coordinate box of radius {0}")]
    SearchExhausted(u32),

    /// The Gram matrix of E is not unimodular over Z.
    #[error("Gram matrix is not unimodular: elementary divisors {0:?}")]
    NotUnimodular(Vec<u64>),

    /// Supplied element does not have reduced norm 1.
    #[error("element has reduced norm != 1")]
    NotAUnit,

    /// Supplied element has non-integral coordinates in the order basis.
    #[error("element is not in the order")]
    NotInOrder,

    /// Unit-enumeration height must be at least 1.
    #[error("unit enumeration height must be >= 1, got {0}")]
    HeightTooSmall(u32),

    /// The second period block is numerically singular.
    #[error("degenerate period columns: |det| = {0:e}")]
    DegeneratePeriods(f64),

    /// The computed period matrix violates the Riemann relations.
    #[error("Riemann relation residual {residual:e} exceeds tolerance {tolerance:e}")]
    RiemannRelationViolation { residual: f64, tolerance: f64 },

    /// tau must lie in the upper half plane.
    #[error("Im tau must be positive, got {0}")]
    NotUpperHalf(f64),

    /// Finite-difference step below the allowed range.
    #[error("finite-difference step {0:e} below 1e-8")]
    StepTooSmall(f64),

    /// Finite-difference step above the allowed range.
    #[error("finite-difference step {0:e} above 1e-4")]
    StepTooLarge(f64),

    /// The matrix is not a Siegel point (not symmetric or Im not positive definite).
    #[error("not a Siegel point: {0}")]
    NotSiegel(String),

    /// h^{1,1} too small for the divisor ranks it must contain.
    #[error("inconsistent h11 = {h11}: divisor-span ranks already total {divisor_ranks}")]
    InconsistentH11 { h11: u64, divisor_ranks: u64 },

    /// An operation needing h^{1,1} was called without it.
    #[error("h11 required but not supplied")]
    MissingH11,
}

pub type Result<T> = std::result::Result<T, Error>;
