use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{n} exceeds the supported size {max}")]
    FieldTooLarge { p: u32, n: u32, max: u64 },
    #[error("modulus must be monic of degree {expected} with coefficients below p")]
    BadModulus { expected: u32 },
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("operands live in different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("cannot embed F_{{{p}^{from}}} into F_{{{p}^{to}}}: {from} does not divide {to}")]
    DegreeNotDividing { p: u32, from: u32, to: u32 },
    #[error("cannot embed characteristic {from} into characteristic {to}")]
    CharacteristicMismatch { from: u32, to: u32 },
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("n must be positive")]
    ZeroRootOrder,
    #[error("matrix is singular")]
    Singular,
    #[error("the identity fixes every point of the line")]
    IdentityFixesAll,
    #[error("points in a triple must be pairwise distinct")]
    RepeatedPoint,
    #[error("polynomial map must have degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("polynomial map is inseparable (derivative vanishes identically)")]
    Inseparable,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureCap(usize),
    #[error("{0}")]
    Precondition(String),
    #[error("characteristic {p} is excluded for {group}")]
    ExcludedCharacteristic { p: u32, group: String },
    #[error("no primitive {n}-th root of unity in F_{{{p}^{degree}}}; enlarge the field to degree {minimal_degree}")]
    MissingRootOfUnity {
        n: u64,
        p: u32,
        degree: u32,
        minimal_degree: u32,
    },
    #[error("{0} is not a unipotent translation group fixing infinity")]
    NotUnipotent(String),
    #[error("rank {m} exceeds the dimension {n}")]
    RankTooLarge { m: u32, n: u32 },
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("curve is singular")]
    SingularCurve,
    #[error("elliptic curves are supported only for p > 3, got p = {0}")]
    SmallCharacteristic(u32),
    #[error("scan of {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("locus point {0} does not lie in the working field")]
    PointOutsideField(String),
    #[error("the set S must be nonempty")]
    EmptyLocus,
    #[error("the map 1 - sigma vanishes for u = 1")]
    TrivialSigma,
}

pub type Result<T> = std::result::Result<T, Error>;
