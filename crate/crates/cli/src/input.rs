//! Reading inputs and telling their formats apart.

use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use torusfold::graph::parse_marked_map;
use torusfold::snappea::parse_snappea;
use torusfold::tg::parse_and_realize;
use torusfold::{MarkedMap, Triangulation3};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Guess from the contents.
    Auto,
    /// Marked graph map (`edge`, `map`, `boundary` lines).
    Map,
    /// `T`/`G` gluing document.
    Tg,
    /// SnapPea triangulation file.
    Snappea,
}

/// An input file, or `-` for standard input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Stdin,
    File(PathBuf),
}

impl Source {
    pub fn parse(s: &str) -> Source {
        if s == "-" {
            Source::Stdin
        } else {
            Source::File(PathBuf::from(s))
        }
    }

    pub fn read(&self) -> Result<String, Failure> {
        match self {
            Source::Stdin => {
                let mut text = String::new();
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::io(self, e))?;
                Ok(text)
            }
            Source::File(p) => std::fs::read_to_string(p).map_err(|e| Failure::io(self, e)),
        }
    }

    /// File stem, used to name outputs and SnapPea manifolds.
    pub fn stem(&self) -> String {
        match self {
            Source::Stdin => "stdin".into(),
            Source::File(p) => p
                .file_stem()
                .map_or_else(|| "output".into(), |s| s.to_string_lossy().into_owned()),
        }
    }

    pub fn path(&self) -> Option<&Path> {
        match self {
            Source::Stdin => None,
            Source::File(p) => Some(p),
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Stdin => f.write_str("<stdin>"),
            Source::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// The first meaningful line decides: SnapPea files start with their
/// header, T/G documents with `T` or `G`, anything else is a marked map.
pub fn detect(text: &str) -> Kind {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with("//") && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("% Triangulation") => Kind::Snappea,
        Some(l) if l.starts_with("T ") || l.starts_with("G ") || l == "T" || l == "G" => Kind::Tg,
        _ => Kind::Map,
    }
}

pub enum Loaded {
    Map(MarkedMap),
    Triangulation(Triangulation3),
}

pub fn load(source: &Source, text: &str, kind: Kind, tighten: bool) -> Result<Loaded, Failure> {
    let kind = if kind == Kind::Auto { detect(text) } else { kind };
    let fail = |e: torusfold::Error| Failure::from_error(source, e);
    Ok(match kind {
        Kind::Map => {
            let mm = parse_marked_map(text).map_err(fail)?;
            Loaded::Map(if tighten { mm.tighten().map_err(fail)? } else { mm })
        }
        Kind::Tg => Loaded::Triangulation(parse_and_realize(text).map_err(fail)?),
        Kind::Snappea => {
            let file = parse_snappea(text).map_err(fail)?;
            Loaded::Triangulation(file.to_triangulation().map_err(fail)?)
        }
        Kind::Auto => unreachable!("resolved above"),
    })
}
