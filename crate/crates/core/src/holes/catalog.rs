//! Named hole shapes.
//!
//! Text format, one entry per line, `|`-separated:
//!
//! ```text
//! # name | source | kind | word | angles | boundary
//! diamond | known | rim | -0 +2 -1 +0 -2 +1 | 1,4,1,4 | +0@1,0,1 ...
//! triangle | known | angles | - | 1,2,2 | -
//! shape-5-0c1d2e3f | discovered | sides | +0@1,0,1 ... | 2,3,2,4,4 | -
//! ```
//!
//! - `rim`: closed walk of tile centers around the hole, each step ±w_k
//!   written `+k`/`-k`. Every link must be a shared side.
//! - `path`: the same with exactly one non-glued link, the word being the
//!   glued path after it.
//! - `angles`: any hole whose angle type matches.
//! - `sides`: the exact boundary, each side `±k@p,q,d` meaning direction
//!   ±U_k and length (p + q√5)/d tile sides.
//!
//! Words are stored canonical. `angles` and `boundary` on named entries
//! are filled in on first sighting. Blank lines and `#` comments are
//! ignored.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::exact::{DirectionClass, QSqrt5};

use super::angles::canonical_angles;
use super::shape::{sides_to_string, HoleSignature, Rim, Side};
use super::word::{Step, StepWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    /// Shipped with the seeded catalog.
    Known,
    Discovered,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Rim(StepWord),
    Path(StepWord),
    Angles(Vec<u8>),
    Sides(Vec<Side>),
}

impl Pattern {
    fn kind(&self) -> &'static str {
        match self {
            Pattern::Rim(_) => "rim",
            Pattern::Path(_) => "path",
            Pattern::Angles(_) => "angles",
            Pattern::Sides(_) => "sides",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub source: Source,
    pub pattern: Pattern,
    pub angles: Option<Vec<u8>>,
    pub boundary: Option<Vec<Side>>,
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("duplicate catalog name {0:?}")]
    DuplicateName(String),
    #[error("catalog entries {0:?} and {1:?} have the same signature")]
    DuplicateSignature(String, String),
}

/// Named hole rims. The diamond's last step is `-0`; with `+0` the walk
/// would not close.
pub const KNOWN_CYCLES: &[(&str, &str)] = &[
    ("diamond", "+4 -2 +0 -4 +2 -0"),
    ("ship", "+2 -0 +3 -1 +0 -2 +1 -3"),
    ("double ship", "+3 -1 +3 -2 +4 -3 +1 -3 +2 -4"),
    ("crown", "-1 +0 -2 +0 -4 +2 -3 +1 -0 +3 -0 +4"),
    ("triple ship", "+3 -0 +4 -0 +4 -1 +0 -3 +0 -4 +1 -4"),
];

/// Other spellings of the same rims, each turned or shifted.
pub const KNOWN_ROTATIONS: &[(&str, &str)] = &[
    ("diamond", "-0 +3 -1 +0 -3 +1"),
    ("diamond", "+1 -4 +2 -1 +4 -2"),
    ("diamond", "+2 -0 +3 -2 +0 -3"),
    ("diamond", "+3 -1 +4 -3 +1 -4"),
    ("ship", "-2 +4 -3 +0 -4 +2 -0 +3"),
    ("ship", "+2 -1 +4 -2 +0 -4 +1 -0"),
    ("ship", "+4 -1 +0 -2 +1 -4 +2 -0"),
    ("ship", "-2 +4 -3 +1 -4 +2 -1 +3"),
    ("double ship", "+0 -3 +2 -4 +3 -0 +3 -2 +4 -3"),
];

/// Named rims with one break, as the glued path after the break.
pub const KNOWN_PATHS: &[(&str, &str)] = &[
    ("snake", "-0 +4 -2 +0 -2 +1 -4 +2"),
    ("fox", "+3 -1 +0 -3 +4 -1 +4 -3 +1 -3 +1 -0 +1 -0 +2"),
    ("bird", "-0 +3 -0 +4 -2 +4 -3 +1 -3"),
    ("three peaks", "-0 +3 -1 +0 -2 +0 -4"),
    ("claw", "-2 +4 -3 +0 -3 +2 -4 +2 -0 +3"),
    ("whale", "-4 +1 -4 +2 -4 +3 -1 +3 -2 +0 -1 +4 -1"),
];

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    by_name: HashMap<String, usize>,
    by_pattern: HashMap<Pattern, usize>,
    by_boundary: HashMap<Vec<Side>, usize>,
    dirty: bool,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// The named words plus the isosceles 36-72-72 triangle.
    pub fn seeded() -> Self {
        let mut c = Catalog::new();
        for (name, word) in KNOWN_CYCLES {
            let w: StepWord = word.parse().expect("built-in word");
            c.push_new(name, Source::Known, Pattern::Rim(w.canonical_cycle()))
                .expect("built-in catalog is consistent");
        }
        for (name, word) in KNOWN_PATHS {
            let w: StepWord = word.parse().expect("built-in word");
            c.push_new(name, Source::Known, Pattern::Path(w.canonical_path()))
                .expect("built-in catalog is consistent");
        }
        c.push_new("triangle", Source::Known, Pattern::Angles(vec![1, 2, 2]))
            .expect("built-in catalog is consistent");
        c.dirty = false;
        c
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.by_name.get(name).map(|&i| &self.entries[i])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Whether entries were added or learned since load.
    pub fn is_dirty(&self) -> bool {
        self.dirty
    }

    fn push_new(
        &mut self,
        name: &str,
        source: Source,
        pattern: Pattern,
    ) -> Result<usize, CatalogError> {
        self.push(CatalogEntry {
            name: name.to_string(),
            source,
            pattern,
            angles: None,
            boundary: None,
        })
    }

    pub fn push(&mut self, mut entry: CatalogEntry) -> Result<usize, CatalogError> {
        if let Pattern::Angles(a) = &entry.pattern {
            entry.angles = Some(a.clone());
        }
        if self.by_name.contains_key(&entry.name) {
            return Err(CatalogError::DuplicateName(entry.name));
        }
        if let Some(&j) = self.by_pattern.get(&entry.pattern) {
            return Err(CatalogError::DuplicateSignature(
                self.entries[j].name.clone(),
                entry.name,
            ));
        }
        let i = self.entries.len();
        if let Some(b) = &entry.boundary {
            if let Some(&j) = self.by_boundary.get(b) {
                return Err(CatalogError::DuplicateSignature(
                    self.entries[j].name.clone(),
                    entry.name,
                ));
            }
            self.by_boundary.insert(b.clone(), i);
        }
        if let Pattern::Sides(s) = &entry.pattern {
            self.by_boundary.insert(s.clone(), i);
        }
        self.by_name.insert(entry.name.clone(), i);
        self.by_pattern.insert(entry.pattern.clone(), i);
        self.entries.push(entry);
        self.dirty = true;
        Ok(i)
    }

    /// Names a hole, adding a discovered entry if nothing matches.
    pub fn classify(&mut self, sig: &HoleSignature, rim: &Rim) -> &CatalogEntry {
        let i = self.lookup(sig, rim).unwrap_or_else(|| self.discover(sig));
        let entry = &mut self.entries[i];
        if entry.angles.is_none() {
            entry.angles = Some(canonical_angles(&sig.angles));
            self.dirty = true;
        }
        if entry.boundary.is_none()
            && !matches!(entry.pattern, Pattern::Sides(_) | Pattern::Angles(_))
            && !self.by_boundary.contains_key(&sig.sides)
        {
            entry.boundary = Some(sig.sides.clone());
            self.by_boundary.insert(sig.sides.clone(), i);
            self.dirty = true;
        }
        &self.entries[i]
    }

    /// Matching entry without modifying the catalog.
    pub fn lookup(&self, sig: &HoleSignature, rim: &Rim) -> Option<usize> {
        if let Some(w) = rim.closed_word() {
            if let Some(&i) = self.by_pattern.get(&Pattern::Rim(w.canonical_cycle())) {
                return Some(i);
            }
        }
        if let Some(w) = rim.open_word() {
            if let Some(&i) = self.by_pattern.get(&Pattern::Path(w.canonical_path())) {
                return Some(i);
            }
        }
        if let Some(&i) = self.by_boundary.get(&sig.sides) {
            return Some(i);
        }
        self.by_pattern
            .get(&Pattern::Angles(canonical_angles(&sig.angles)))
            .copied()
    }

    fn discover(&mut self, sig: &HoleSignature) -> usize {
        let base = format!(
            "shape-{}-{:08x}",
            sig.l,
            fnv1a(sig.sides_token().as_bytes()) as u32
        );
        let mut name = base.clone();
        let mut k = 2;
        while self.by_name.contains_key(&name) {
            name = format!("{base}-{k}");
            k += 1;
        }
        self.push(CatalogEntry {
            name,
            source: Source::Discovered,
            pattern: Pattern::Sides(sig.sides.clone()),
            angles: Some(canonical_angles(&sig.angles)),
            boundary: None,
        })
        .expect("fresh name and unseen boundary")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# name | source | kind | word | angles | boundary\n");
        for e in &self.entries {
            let source = match e.source {
                Source::Known => "known",
                Source::Discovered => "discovered",
            };
            let word = match &e.pattern {
                Pattern::Rim(w) | Pattern::Path(w) => w.to_string(),
                Pattern::Angles(_) => "-".to_string(),
                Pattern::Sides(s) => sides_to_string(s),
            };
            let angles = e.angles.as_deref().map(join_angles).unwrap_or("-".into());
            let boundary = e
                .boundary
                .as_deref()
                .map(sides_to_string)
                .unwrap_or("-".into());
            let _ = writeln!(
                out,
                "{} | {source} | {} | {word} | {angles} | {boundary}",
                e.name,
                e.pattern.kind()
            );
        }
        out
    }

    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut c = Catalog::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| CatalogError::Parse { line: n + 1, msg };
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            if fields.len() != 6 {
                return Err(err(format!("expected 6 fields, found {}", fields.len())));
            }
            let source = match fields[1] {
                "known" => Source::Known,
                "discovered" => Source::Discovered,
                s => return Err(err(format!("unknown source {s:?}"))),
            };
            let word = |s: &str| s.parse::<StepWord>().map_err(|e| err(e.to_string()));
            let angles = parse_angles(fields[4]).map_err(err)?;
            let pattern = match fields[2] {
                "rim" => Pattern::Rim(word(fields[3])?.canonical_cycle()),
                "path" => Pattern::Path(word(fields[3])?.canonical_path()),
                "angles" => Pattern::Angles(canonical_angles(
                    &angles
                        .clone()
                        .ok_or_else(|| err("angles entry without angles".into()))?,
                )),
                "sides" => Pattern::Sides(
                    HoleSignature::from_sides(&parse_sides(fields[3]).map_err(err)?).sides,
                ),
                k => return Err(err(format!("unknown kind {k:?}"))),
            };
            let boundary = match fields[5] {
                "-" => None,
                s => Some(HoleSignature::from_sides(&parse_sides(s).map_err(err)?).sides),
            };
            c.push(CatalogEntry {
                name: fields[0].to_string(),
                source,
                pattern,
                angles: angles.map(|a| canonical_angles(&a)),
                boundary,
            })?;
        }
        c.dirty = false;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Catalog, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Catalog::parse(&text)
    }

    pub fn save(&mut self, path: &Path) -> Result<(), CatalogError> {
        std::fs::write(path, self.to_text()).map_err(|source| CatalogError::Io {
            path: path.display().to_string(),
            source,
        })?;
        self.dirty = false;
        Ok(())
    }
}

pub fn join_angles(a: &[u8]) -> String {
    a.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
}

fn parse_angles(s: &str) -> Result<Option<Vec<u8>>, String> {
    if s == "-" {
        return Ok(None);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u8>()
                .map_err(|_| format!("bad angle {t:?}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn parse_sides(s: &str) -> Result<Vec<Side>, String> {
    s.split_whitespace()
        .map(|tok| {
            let (step, len) = tok
                .split_once('@')
                .ok_or_else(|| format!("bad side {tok:?}"))?;
            let step: Step = step
                .parse()
                .map_err(|e: super::word::ParseStepError| e.to_string())?;
            let nums: Vec<i64> = len
                .split(',')
                .map(|x| x.parse::<i64>().map_err(|_| format!("bad length {len:?}")))
                .collect::<Result<_, _>>()?;
            match nums[..] {
                [p, q, d] if d > 0 => Ok(Side {
                    class: DirectionClass::new(step.class().index() as i64),
                    length: QSqrt5::new(p, q, d),
                }),
                _ => Err(format!("bad length {len:?}")),
            }
        })
        .collect()
}

/// 64-bit FNV-1a; stable across platforms and releases, unlike std's hasher.
fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}
