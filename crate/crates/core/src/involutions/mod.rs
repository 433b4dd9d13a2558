//! Path rewriting systems and sign-reversing involutions, each with an
//! exhaustive checker that reports involutivity, sign reversal, the
//! fixed-point set and the resulting signed sum.

pub mod ba;
pub mod counterpart;
pub mod signless;
pub mod sum2;
pub mod touching;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::Pt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Plain,
    Green,
    Red,
    Blue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Step {
    pub d: Pt,
    pub color: Color,
}

impl Step {
    pub const fn new(d: Pt, color: Color) -> Self {
        Step { d, color }
    }

    pub fn is_horizontal(&self) -> bool {
        self.d.1 == 0
    }
}

/// A lattice path given by its start and a list of colored steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredPath {
    pub start: Pt,
    pub steps: Vec<Step>,
}

impl ColoredPath {
    pub fn new(start: Pt, steps: Vec<Step>) -> Self {
        ColoredPath { start, steps }
    }

    pub fn points(&self) -> Vec<Pt> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        pts.push(p);
        for s in &self.steps {
            p = (p.0 + s.d.0, p.1 + s.d.1);
            pts.push(p);
        }
        pts
    }

    pub fn end(&self) -> Pt {
        self.steps.iter().fold(self.start, |p, s| (p.0 + s.d.0, p.1 + s.d.1))
    }

    /// Compact text form, one letter per step: `P`lain, `G`reen, `R`ed,
    /// `B`lue followed by the step vector.
    pub fn describe(&self) -> String {
        let body: Vec<String> = self
            .steps
            .iter()
            .map(|s| {
                let c = match s.color {
                    Color::Plain => 'P',
                    Color::Green => 'G',
                    Color::Red => 'R',
                    Color::Blue => 'B',
                };
                format!("{c}({},{})", s.d.0, s.d.1)
            })
            .collect();
        format!("({},{}) {}", self.start.0, self.start.1, body.join(" "))
    }
}

/// Which rewriting system to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum System {
    Ba,
    Sum2,
    Signless,
    Touching,
    Counterpart,
}

impl System {
    pub const ALL: [System; 5] = [System::Ba, System::Sum2, System::Signless, System::Touching, System::Counterpart];

    pub fn name(self) -> &'static str {
        match self {
            System::Ba => "ba",
            System::Sum2 => "sum2",
            System::Signless => "signless",
            System::Touching => "touching",
            System::Counterpart => "counterpart",
        }
    }

    /// Default parameter bounds used by the command line and the acceptance run.
    pub fn default_bounds(self) -> Vec<usize> {
        match self {
            System::Ba => vec![12, 6],
            System::Sum2 => vec![6, 6],
            System::Signless => vec![6, 3],
            System::Touching => vec![3],
            System::Counterpart => vec![3, 3],
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for System {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        System::ALL
            .into_iter()
            .find(|sys| sys.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown system '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub system: String,
    pub params: Value,
    pub inputs_checked: u64,
    pub fixed_points: u64,
    pub signed_sum: Value,
    pub status: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl Report {
    pub(crate) fn new(system: System, params: Value) -> Self {
        Report {
            system: system.name().to_string(),
            params,
            inputs_checked: 0,
            fixed_points: 0,
            signed_sum: Value::Null,
            status: "pass".into(),
            failures: Vec::new(),
        }
    }

    pub(crate) fn fail(&mut self, msg: impl Into<String>) {
        self.status = "fail".into();
        if self.failures.len() < 10 {
            self.failures.push(msg.into());
        }
    }

    pub(crate) fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Runs the exhaustive checks of one system for every parameter tuple up to
/// `bounds` (see [`System::default_bounds`] for the meaning of each entry).
pub fn verify(system: System, bounds: &[usize]) -> Result<Vec<Report>> {
    let want = system.default_bounds().len();
    if bounds.len() != want {
        return Err(Error::Parse(format!("{system} takes {want} bound(s), got {}", bounds.len())));
    }
    Ok(match system {
        System::Ba => ba::verify_all(bounds[0], bounds[1]),
        System::Sum2 => sum2::verify_all(bounds[0], bounds[1]),
        System::Signless => signless::verify_all(bounds[0], bounds[1]),
        System::Touching => touching::verify_all(bounds[0]),
        System::Counterpart => counterpart::verify_all(bounds[0], bounds[1]),
    })
}
