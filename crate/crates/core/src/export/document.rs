//! Versioned, integer-only text form of a structure.
//!
//! ```text
//! pentagrow-structure 1
//! seed 42
//! n 2
//! 0 0 0 0 0 U 0 - -
//! 1 1 1 0 0 D 1 0 0
//! ```
//!
//! Tile rows are `id a0 a1 a2 a3 orientation stage parent side`, with the
//! center as coefficients over (1, ζ, ζ², ζ³) and `-` for the seed's
//! missing parent and side.

use std::fmt::Write as _;
use std::path::Path;

use crate::exact::{interiors_overlap, CycPoint, Orientation};
use crate::growth::{ghost_placement, Pentagon, SpatialHash, Structure, REACH};

pub const FORMAT_NAME: &str = "pentagrow-structure";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("unsupported format version {found} (this build reads {FORMAT_VERSION})")]
    VersionMismatch { found: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub fn to_text(structure: &Structure) -> String {
    let mut out = String::with_capacity(40 * structure.len() + 64);
    let _ = writeln!(out, "{FORMAT_NAME} {FORMAT_VERSION}");
    let _ = writeln!(out, "seed {}", structure.seed);
    let _ = writeln!(out, "n {}", structure.len());
    for p in structure.pentagons() {
        let [a0, a1, a2, a3] = p.center.coeffs();
        let o = match p.orientation {
            Orientation::Up => 'U',
            Orientation::Down => 'D',
        };
        let parent = p.parent.map_or("-".to_string(), |x| x.to_string());
        let side = p.parent_side.map_or("-".to_string(), |x| x.to_string());
        let _ = writeln!(
            out,
            "{} {a0} {a1} {a2} {a3} {o} {} {parent} {side}",
            p.id, p.stage
        );
    }
    out
}

/// Parses and validates.
pub fn from_text(text: &str) -> Result<Structure, LoadError> {
    let s = parse_unchecked(text)?;
    validate(&s).map_err(LoadError::InvariantViolation)?;
    Ok(s)
}

/// Parses without checking any geometric invariant, for tools that want
/// to report every violation themselves.
pub fn parse_unchecked(text: &str) -> Result<Structure, LoadError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let bad = |line: usize, msg: &str| LoadError::Malformed {
        line,
        msg: msg.to_string(),
    };

    let (ln, header) = lines.next().ok_or_else(|| bad(1, "empty file"))?;
    let mut h = header.split_whitespace();
    if h.next() != Some(FORMAT_NAME) {
        return Err(bad(ln, "missing format header"));
    }
    let version = h.next().ok_or_else(|| bad(ln, "missing version"))?;
    if version != FORMAT_VERSION.to_string() {
        return Err(LoadError::VersionMismatch {
            found: version.to_string(),
        });
    }

    let mut field = |key: &str| -> Result<u64, LoadError> {
        let (ln, l) = lines.next().ok_or_else(|| bad(0, "truncated header"))?;
        match l.split_once(' ') {
            Some((k, v)) if k == key => v
                .trim()
                .parse()
                .map_err(|_| bad(ln, &format!("bad {key} value"))),
            _ => Err(bad(ln, &format!("expected `{key} <value>`"))),
        }
    };
    let seed = field("seed")?;
    let n = field("n")? as usize;

    let mut pentagons = Vec::with_capacity(n);
    for (ln, l) in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        if t.len() != 9 {
            return Err(bad(ln, "expected 9 fields"));
        }
        let int = |s: &str| s.parse::<i64>().map_err(|_| bad(ln, "bad integer"));
        let opt = |s: &str| -> Result<Option<usize>, LoadError> {
            if s == "-" {
                Ok(None)
            } else {
                s.parse()
                    .map(Some)
                    .map_err(|_| bad(ln, "bad parent or side"))
            }
        };
        let id: usize = t[0].parse().map_err(|_| bad(ln, "bad id"))?;
        let center = CycPoint::new(int(t[1])?, int(t[2])?, int(t[3])?, int(t[4])?);
        let orientation = match t[5] {
            "U" => Orientation::Up,
            "D" => Orientation::Down,
            _ => return Err(bad(ln, "orientation must be U or D")),
        };
        let stage: usize = t[6].parse().map_err(|_| bad(ln, "bad stage"))?;
        let parent = opt(t[7])?;
        let side = opt(t[8])?;
        if side.is_some_and(|s| s > 4) {
            return Err(bad(ln, "side must be 0..4"));
        }
        if id != pentagons.len() {
            return Err(bad(ln, "ids must be 0, 1, 2, ... in order"));
        }
        pentagons.push(Pentagon {
            id,
            center,
            orientation,
            stage,
            parent,
            parent_side: side.map(|s| s as u8),
        });
    }
    if pentagons.len() != n {
        return Err(LoadError::Malformed {
            line: 3,
            msg: format!("header says n = {n}, found {} tiles", pentagons.len()),
        });
    }
    Ok(Structure { seed, pentagons })
}

/// Checks the tree, the gluing geometry, orientation parity and
/// interior-disjointness of all nearby pairs.
pub fn validate(s: &Structure) -> Result<(), String> {
    let tiles = s.pentagons();
    let Some(seed) = tiles.first() else {
        return Err("structure has no tiles".into());
    };
    if seed.center != CycPoint::ZERO || seed.orientation != Orientation::Up || seed.parent.is_some()
    {
        return Err("tile 0 must be the Up seed at the origin".into());
    }
    let depth = {
        let mut d = vec![0usize; tiles.len()];
        for p in &tiles[1..] {
            let (Some(parent), Some(side)) = (p.parent, p.parent_side) else {
                return Err(format!("tile {} has no parent", p.id));
            };
            if parent >= p.id {
                return Err(format!("tile {} has a later parent {parent}", p.id));
            }
            if p.stage != p.id {
                return Err(format!("tile {} has stage {}", p.id, p.stage));
            }
            let q = &tiles[parent];
            let (c, o) =
                ghost_placement(&q.center, q.orientation, side).map_err(|e| e.to_string())?;
            if c != p.center || o != p.orientation {
                return Err(format!(
                    "tile {} is not glued to side {side} of tile {parent}",
                    p.id
                ));
            }
            d[p.id] = d[parent] + 1;
        }
        d
    };
    for p in tiles {
        let even = depth[p.id].is_multiple_of(2);
        if even != (p.orientation == Orientation::Up) {
            return Err(format!("tile {} breaks orientation parity", p.id));
        }
    }
    if let Some((a, b)) = first_overlap(s) {
        return Err(format!("tiles {a} and {b} overlap"));
    }
    Ok(())
}

/// Some pair of tiles whose interiors overlap, if any.
pub fn first_overlap(s: &Structure) -> Option<(usize, usize)> {
    let mut grid = SpatialHash::new();
    let mut near = Vec::new();
    for p in s.pentagons() {
        near.clear();
        grid.query(&p.center, REACH, &mut near);
        near.sort_unstable();
        for &q in &near {
            let q = &s.pentagons()[q as usize];
            if interiors_overlap(&p.center, p.orientation, &q.center, q.orientation) {
                return Some((q.id, p.id));
            }
        }
        grid.insert(&p.center, p.id as u32);
    }
    None
}

pub fn save(structure: &Structure, path: &Path) -> Result<(), LoadError> {
    std::fs::write(path, to_text(structure)).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load(path: &Path) -> Result<Structure, LoadError> {
    from_text(&read(path)?)
}

pub fn load_unchecked(path: &Path) -> Result<Structure, LoadError> {
    parse_unchecked(&read(path)?)
}

fn read(path: &Path) -> Result<String, LoadError> {
    std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })
}
