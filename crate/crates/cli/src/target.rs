//! Verification targets and their admissible `n`.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    L2_3,
    L2_4,
    L3_1,
    L3_2,
    L4_1,
    L4_2,
    L4_3,
    L4_4,
    L4_5,
    L4_6,
    L4_7,
}

impl Lemma {
    pub const ALL: [Lemma; 11] = [
        Lemma::L2_3,
        Lemma::L2_4,
        Lemma::L3_1,
        Lemma::L3_2,
        Lemma::L4_1,
        Lemma::L4_2,
        Lemma::L4_3,
        Lemma::L4_4,
        Lemma::L4_5,
        Lemma::L4_6,
        Lemma::L4_7,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Lemma::L2_3 => "lemma2.3",
            Lemma::L2_4 => "lemma2.4",
            Lemma::L3_1 => "lemma3.1",
            Lemma::L3_2 => "lemma3.2",
            Lemma::L4_1 => "lemma4.1",
            Lemma::L4_2 => "lemma4.2",
            Lemma::L4_3 => "lemma4.3",
            Lemma::L4_4 => "lemma4.4",
            Lemma::L4_5 => "lemma4.5",
            Lemma::L4_6 => "lemma4.6",
            Lemma::L4_7 => "lemma4.7",
        }
    }

    fn range(self) -> (usize, usize) {
        match self {
            Lemma::L2_3 | Lemma::L3_1 | Lemma::L3_2 => (3, 6),
            Lemma::L4_3 | Lemma::L4_4 => (4, 5),
            Lemma::L4_6 => (4, 8),
            _ => (4, 6),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Theorem1,
    Theorem2,
    Corollary1,
    Corollary2,
    Corollary3,
    Prop2_1,
    Prop3_3,
    Prop4_8,
    Lemma(Lemma),
    /// Brute-force oracles against the convolution kernel.
    CrossValidation,
    All,
}

impl Target {
    /// Every target except `all`, in the order `all` runs them.
    pub fn concrete() -> Vec<Target> {
        let mut v = vec![
            Target::Theorem1,
            Target::Theorem2,
            Target::Corollary1,
            Target::Corollary2,
            Target::Corollary3,
            Target::Prop2_1,
            Target::Prop3_3,
            Target::Prop4_8,
        ];
        v.extend(Lemma::ALL.map(Target::Lemma));
        v.push(Target::CrossValidation);
        v
    }

    pub fn id(self) -> &'static str {
        match self {
            Target::Theorem1 => "theorem1",
            Target::Theorem2 => "theorem2",
            Target::Corollary1 => "corollary1",
            Target::Corollary2 => "corollary2",
            Target::Corollary3 => "corollary3",
            Target::Prop2_1 => "prop2.1",
            Target::Prop3_3 => "prop3.3",
            Target::Prop4_8 => "prop4.8",
            Target::Lemma(l) => l.id(),
            Target::CrossValidation => "crossval",
            Target::All => "all",
        }
    }

    pub fn default_n(self) -> usize {
        match self {
            Target::Theorem1 | Target::Prop3_3 => 5,
            _ => 4,
        }
    }

    /// `(min, max, max with --allow-slow)`
    pub fn range(self) -> (usize, usize, usize) {
        match self {
            Target::Theorem1 | Target::Corollary1 | Target::Corollary2 | Target::Corollary3 => (1, 6, 6),
            Target::Theorem2 => (1, 5, 6),
            Target::Prop2_1 => (1, 6, 6),
            Target::Prop3_3 => (3, 6, 6),
            Target::Prop4_8 => (4, 5, 6),
            Target::Lemma(l) => {
                let (lo, hi) = l.range();
                (lo, hi, hi)
            }
            Target::CrossValidation => (4, 5, 5),
            Target::All => (1, 8, 8),
        }
    }

    pub fn accepts(self, n: usize, allow_slow: bool) -> bool {
        let (lo, hi, slow) = self.range();
        n >= lo && n <= if allow_slow { slow } else { hi }
    }

    /// Statistic the report is about, if there is a single one.
    pub fn kind(self) -> Option<&'static str> {
        match self {
            Target::Theorem1 | Target::Prop3_3 => Some("desx"),
            Target::Theorem2 | Target::Prop4_8 => Some("invx"),
            Target::Corollary1 => Some("des"),
            Target::Corollary2 => Some("maj"),
            Target::Corollary3 => Some("inv"),
            Target::Lemma(Lemma::L2_3 | Lemma::L3_1 | Lemma::L3_2) => Some("desx"),
            Target::Lemma(_) => Some("invx"),
            Target::Prop2_1 | Target::CrossValidation | Target::All => None,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Target {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(Target::All);
        }
        Target::concrete().into_iter().find(|t| t.id() == s).ok_or_else(|| {
            let names: Vec<&str> = Target::concrete().iter().map(|t| t.id()).chain(["all"]).collect();
            format!("unknown target {s:?}; expected one of {}", names.join(", "))
        })
    }
}
