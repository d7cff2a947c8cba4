use thiserror::Error;

/// Crate-wide error type. Variants carry the context needed to name the
/// offending frame, key, or dimension in CLI output.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty region")]
    EmptyRegion,
    #[error("grid exceeds region ({rows}x{cols} grid over {w}x{h} region)")]
    GridExceedsRegion { rows: u32, cols: u32, w: u32, h: u32 },
    #[error("descriptor shape mismatch")]
    DescriptorShapeMismatch,
    #[error("region outside frame")]
    RegionOutsideFrame,
    #[error("degenerate bounding box (zero area)")]
    DegenerateBox,
    #[error("empty background ring around object box")]
    EmptyBackground,
    #[error("empty depth frame (no valid pixels)")]
    EmptyDepthFrame,
    #[error("dimension mismatch: expected {expected_w}x{expected_h}, got {actual_w}x{actual_h}")]
    DimensionMismatch {
        expected_w: usize,
        expected_h: usize,
        actual_w: usize,
        actual_h: usize,
    },
    #[error("vanished target evidence")]
    VanishedTargetEvidence,
    #[error("no occluder evidence")]
    NoOccluderEvidence,
    #[error("zero evaluated frames")]
    ZeroEvaluatedFrames,
    #[error("prediction/ground-truth length mismatch: {preds} vs {gt}")]
    LengthMismatch { preds: usize, gt: usize },
    #[error("invalid occluder: occluder depth {occluder} is not closer than target depth {target}")]
    InvalidOccluder { occluder: f64, target: f64 },
    #[error("unknown config key `{0}`")]
    UnknownConfigKey(String),
    #[error("bad config value for `{key}`: {reason}")]
    BadConfigValue { key: String, reason: String },
    #[error("missing config key `{0}`")]
    MissingConfigKey(String),
    #[error("config line {line} is not `key = value`: {text}")]
    MalformedConfigLine { line: usize, text: String },
    #[error("missing depth frame {0}")]
    MissingDepthFrame(u64),
    #[error("missing color frame {0}")]
    MissingColorFrame(u64),
    #[error("frame count mismatch: {rgb} color frames vs {depth} depth frames")]
    FrameCountMismatch { rgb: usize, depth: usize },
    #[error("ground truth has {gt} entries for {frames} frames")]
    GroundTruthLengthMismatch { gt: usize, frames: usize },
    #[error("unparsable init box: {0}")]
    BadInitBox(String),
    #[error("bad ground-truth line {line}: {text}")]
    BadGroundTruthLine { line: usize, text: String },
    #[error("bad boxes-file line {line}: {text}")]
    BadBoxesLine { line: usize, text: String },
    #[error("sequence directory {0} is missing {1}")]
    SequenceLayout(String, &'static str),
    #[error("unsupported depth image format for {0} (need 8-bit or 16-bit grayscale)")]
    UnsupportedDepthFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Image(#[from] image::ImageError),
}

pub type Result<T> = std::result::Result<T, Error>;
