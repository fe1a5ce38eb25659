use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed marked-map input.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Malformed `T`/`G` document or an inconsistent gluing in it.
    #[error("T/G line {line}: {msg}")]
    Tg { line: usize, msg: String },

    #[error("SnapPea: {0}")]
    SnapPea(String),

    #[error("unknown edge label `{0}`")]
    UnknownEdge(String),

    #[error("edge path is not composable between steps {0} and {next}", next = .0 + 1)]
    NotComposable(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not a spine of a once-punctured surface (1 + E - V = {0})")]
    NonIntegralGenus(i64),

    #[error("vertex `{vertex}` has valence {valence} < 3")]
    LowValence { vertex: String, valence: usize },

    #[error("invalid marked map: {0}")]
    Invalid(String),

    #[error("orientation-reversing maps (f(sigma) ~ sigma^-1) are not supported")]
    OrientationReversing,

    #[error("input is not a homotopy-equivalence representative: {0}")]
    NotHomotopyEquivalence(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// Internal contract violation in the fold machinery.
    #[error("fold: {0}")]
    Fold(String),

    #[error("surface complex: {0}")]
    Surface(String),

    #[error("triangulation: {0}")]
    Triangulation(String),

    /// A pipeline stage failed; `stage` names it.
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// True for errors caused by unreadable input rather than failed checks.
    pub fn is_parse_error(&self) -> bool {
        match self {
            Error::Parse { .. } | Error::Tg { .. } | Error::SnapPea(_) | Error::UnknownEdge(_) => {
                true
            }
            Error::Stage { source, .. } => source.is_parse_error(),
            _ => false,
        }
    }
}
