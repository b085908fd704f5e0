use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("gcd of the generators is {0}, not 1")]
    GcdNotOne(u64),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),
    #[error("algebra is not Gorenstein (semigroup is not M-pure symmetric)")]
    NotGorenstein,
    #[error("quotient algebra at step {0} is not Gorenstein")]
    NotGorensteinAtStep(usize),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("algebra is not a complete intersection")]
    NotCi,
    #[error("degree out of range: {0}")]
    DegreeOutOfRange(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("basis of degree {0} is linearly dependent modulo the annihilator")]
    DependentBasis(usize),
    #[error("basis of degree {degree} has {got} elements, the component has dimension {expected}")]
    BasisSize {
        degree: usize,
        got: usize,
        expected: usize,
    },
    #[error("ideal generator degree {0} is below 2")]
    DegreeTooSmall(u32),
    #[error("polynomial parse error: {0}")]
    Parse(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial variable lists do not match")]
    VariableMismatch,
    #[error("index {0} does not name a variable of the algebra")]
    NoSuchVariable(usize),
    #[error("invalid seed {0:?}: expected a non-negative decimal integer")]
    InvalidSeed(String),
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error("{0}")]
    Structure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
