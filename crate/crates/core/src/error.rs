use thiserror::Error;

/// Everything that can go wrong while building or checking an object.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid half-integer {0:?}: expected \"p\" or \"p/2\" with p odd")]
    BadHalfInt(String),
    #[error("value {0} overflows the half-integer range")]
    Overflow(String),
    #[error("weight has signature ({a},{b}) but parts of length ({x},{y})")]
    WeightShape {
        a: usize,
        b: usize,
        x: usize,
        y: usize,
    },
    #[error("partition rows must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("partition {partition:?} is not contained in frame {a}x{b}")]
    NotInFrame {
        partition: Vec<usize>,
        a: usize,
        b: usize,
    },
    #[error("alpha {alpha:?} is not contained in beta {beta:?}")]
    NotNested { alpha: Vec<usize>, beta: Vec<usize> },
    #[error("no block decomposition for alpha={alpha:?}, beta={beta:?} in {a}x{b}")]
    NoBlockDecomposition {
        alpha: Vec<usize>,
        beta: Vec<usize>,
        a: usize,
        b: usize,
    },
    #[error("element is not dominant: each part must be weakly decreasing")]
    NotDominant,
    #[error("summand {0} has dimension 0")]
    EmptySummand(usize),
    #[error("block {0} is (0,0)")]
    EmptyBlock(usize),
    #[error("lambda has {got} entries but the algebra has {expected} blocks")]
    Misaligned { expected: usize, got: usize },
    #[error("lambda must be weakly decreasing: {0:?}")]
    LambdaNotDecreasing(Vec<i64>),
    #[error("block index {r0} out of range 1..={rank}")]
    BadBlockIndex { r0: usize, rank: usize },
    #[error(
        "chi parity: alpha1={alpha1} must be = {n} and alpha2={alpha2} must be = {n_prime} (mod 2)"
    )]
    ChiParity {
        alpha1: i64,
        alpha2: i64,
        n: usize,
        n_prime: usize,
    },
    #[error(
        "chi context (n={n}, n'={n_prime}) does not match the lift (n={want_n}, n'={want_n_prime})"
    )]
    ChiContext {
        n: usize,
        n_prime: usize,
        want_n: usize,
        want_n_prime: usize,
    },
    #[error("target must be strictly larger: n'={n_prime} >= n={n}")]
    TargetTooSmall { n_prime: usize, n: usize },
    #[error("source character is not integral at block {0}")]
    NonIntegral(usize),
    #[error("Howe bound violated: t+w={tw} > a={a} or v+u={vu} > b={b}")]
    HoweBound {
        tw: usize,
        vu: usize,
        a: usize,
        b: usize,
    },
    #[error("weight does not sit on the expected half-integer lattice")]
    Lattice,
    #[error("{field}: {message} (at {position})")]
    Parse {
        field: String,
        position: String,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
