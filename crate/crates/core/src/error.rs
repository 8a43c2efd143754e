use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial exponent overflows u32")]
    ExponentOverflow,
    #[error("invalid presentation a={a}, b={b}, q={q}: need a >= 1, b >= 1, 0 <= q <= b")]
    InvalidPresentation { a: u64, b: u64, q: u64 },
    #[error("a = {0} is outside the supported range 1..=2^63")]
    UnsupportedA(u64),
    #[error("b must be at least 1")]
    InvalidB,
    #[error("q = {q} is outside 0..={b}")]
    QOutOfRange { q: u64, b: u64 },
    #[error("elements belong to different rings {left} and {right}")]
    PresentationMismatch { left: String, right: String },
    #[error("rings with different (a, b): ({0}, {1}) vs ({2}, {3})")]
    ShapeMismatch(u32, u32, u32, u32),
    #[error("stable classes over different bases: a={0} vs a={1}")]
    BaseMismatch(u64, u64),
}

pub type Result<T> = std::result::Result<T, Error>;
