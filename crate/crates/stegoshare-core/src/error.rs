use thiserror::Error;

/// Errors produced by the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A bit stream cannot be sliced into whole 8-bit blocks.
    #[error("malformed bit block: {bits} bits cannot be decoded as whole bytes")]
    MalformedBlock { bits: usize },

    /// Two share sequences cannot be interleaved back into one sequence.
    #[error("malformed shares: lengths {share1} and {share2} cannot interleave")]
    MalformedShares { share1: usize, share2: usize },

    /// The payload does not fit into the carrier image.
    #[error("capacity exceeded: {required} bits required, {available} available")]
    CapacityExceeded { required: usize, available: usize },

    /// Two images that must have identical dimensions do not.
    #[error("dimension mismatch: {width_a}x{height_a} vs {width_b}x{height_b}")]
    DimensionMismatch {
        width_a: u32,
        height_a: u32,
        width_b: u32,
        height_b: u32,
    },

    /// An image cannot be built because the pixel buffer does not match
    /// the declared dimensions.
    #[error("pixel count mismatch: {width}x{height} needs {expected} pixels, got {actual}")]
    PixelCountMismatch {
        width: u32,
        height: u32,
        expected: usize,
        actual: usize,
    },

    /// Zero-area images are not valid carriers or payloads.
    #[error("invalid dimensions: {width}x{height}")]
    InvalidDimensions { width: u32, height: u32 },

    /// The payload frame header does not start with the expected magic
    /// bytes. This is what a wrong key or an unrelated stego image looks
    /// like to the detector.
    #[error("authentication failure: payload header magic not found (wrong key or stego image?)")]
    AuthenticationFailure,

    /// The payload frame is shorter or longer than its header declares.
    #[error("truncated frame: expected {expected} bytes, found {actual}")]
    TruncatedFrame { expected: usize, actual: usize },

    /// The payload frame declares a kind this library does not know.
    #[error("unknown payload kind {0:#04x}")]
    UnknownKind(u8),

    /// An image payload exceeds the dimensions the frame format can carry.
    #[error("unsupported payload dimensions: {width}x{height} (limit 65535 per side)")]
    UnsupportedDimensions { width: u32, height: u32 },

    /// The input is not a PGM file this library reads.
    #[error("unsupported image format: {0}")]
    UnsupportedFormat(String),

    /// The PGM file uses a sample depth other than 8 bits.
    #[error("unsupported sample depth: maxval {0} (only 255 supported)")]
    UnsupportedDepth(u32),

    /// The PGM raster holds fewer or more samples than the header declares.
    #[error("truncated image: expected {expected} samples, found {actual}")]
    TruncatedImage { expected: usize, actual: usize },

    /// A PGM ASCII sample is not a grey value in 0..=255.
    #[error("malformed sample: {0}")]
    MalformedSample(String),
}

/// Result alias used throughout the library.
pub type Result<T> = std::result::Result<T, Error>;
