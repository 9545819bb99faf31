//! Size limits for the exponential oracles.

use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};

/// Environment variable read by [`Budget::from_env`].
pub const BUDGET_ENV: &str = "TWTIE_BUDGET";

/// Per-operation size limits. Every exact oracle refuses inputs above its
/// limit with [`Error::Budget`] rather than running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Vertices, for the treewidth subset DP.
    pub treewidth: usize,
    /// Edges, for the branchwidth subset DP.
    pub branchwidth: usize,
    /// Vertices, for separation numbers.
    pub separation: usize,
    /// Vertices, for linkedness.
    pub linkedness: usize,
    /// Vertices, for the well-linked number and set checks.
    pub well_linked: usize,
    /// Vertices, for the Hadwiger number.
    pub hadwiger: usize,
    /// Vertices, for fractional and r-integral Hadwiger numbers.
    pub fractional_hadwiger: usize,
    /// Vertices, for enumerations over all small subsets (tangles).
    pub subsets: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            treewidth: 14,
            branchwidth: 12,
            separation: 16,
            linkedness: 10,
            well_linked: 9,
            hadwiger: 10,
            fractional_hadwiger: 6,
            subsets: 20,
        }
    }
}

const KEYS: [&str; 8] = [
    "treewidth",
    "branchwidth",
    "separation",
    "linkedness",
    "well_linked",
    "hadwiger",
    "fractional_hadwiger",
    "subsets",
];

impl Budget {
    fn slot(&mut self, key: &str) -> Option<&mut usize> {
        Some(match key {
            "treewidth" | "tw" => &mut self.treewidth,
            "branchwidth" | "bw" => &mut self.branchwidth,
            "separation" | "sep" => &mut self.separation,
            "linkedness" | "link" => &mut self.linkedness,
            "well_linked" | "wl" => &mut self.well_linked,
            "hadwiger" | "had" => &mut self.hadwiger,
            "fractional_hadwiger" | "had_f" => &mut self.fractional_hadwiger,
            "subsets" => &mut self.subsets,
            _ => return None,
        })
    }

    fn values(&self) -> [usize; 8] {
        [
            self.treewidth,
            self.branchwidth,
            self.separation,
            self.linkedness,
            self.well_linked,
            self.hadwiger,
            self.fractional_hadwiger,
            self.subsets,
        ]
    }

    /// Applies `key=value` overrides separated by commas. A bare number sets
    /// every limit at once.
    pub fn apply(&mut self, overrides: &str) -> Result<()> {
        for item in overrides.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item.split_once('=') {
                Some((key, value)) => {
                    let value = parse_limit(value)?;
                    match self.slot(key.trim()) {
                        Some(slot) => *slot = value,
                        None => return input(format!("unknown budget key `{}`", key.trim())),
                    }
                }
                None => {
                    let value = parse_limit(item)?;
                    for key in KEYS {
                        *self.slot(key).unwrap() = value;
                    }
                }
            }
        }
        Ok(())
    }

    /// Defaults overridden by the `TWTIE_BUDGET` environment variable, if set.
    pub fn from_env() -> Result<Self> {
        let mut b = Budget::default();
        if let Ok(text) = std::env::var(BUDGET_ENV) {
            b.apply(&text)?;
        }
        Ok(b)
    }
}

fn parse_limit(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Input(format!("bad budget value `{}`", s.trim())))
}

impl FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut b = Budget::default();
        b.apply(s)?;
        Ok(b)
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (key, value)) in KEYS.iter().zip(self.values()).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{key}={value}")?;
        }
        Ok(())
    }
}
