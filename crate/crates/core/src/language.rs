//! Structural rules, signatures and the 36 monoidal languages built from them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LanguageError {
    #[error("contraction requires exchange")]
    ContractionWithoutExchange,
    #[error("reversal only combines with both connections")]
    InvalidSignature,
    #[error("unknown structural rule `{0}` (expected a subset of \"wec\")")]
    UnknownRule(char),
    #[error("unknown signature symbol `{0}` (expected a subset of \"jmr\")")]
    UnknownSymbol(char),
}

/// A set of structural rules. Only the six subsets in which contraction
/// implies exchange can be constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct StructuralRules {
    weakening: bool,
    exchange: bool,
    contraction: bool,
}

impl StructuralRules {
    pub const NONE: Self = Self::raw(false, false, false);
    pub const E: Self = Self::raw(false, true, false);
    pub const EC: Self = Self::raw(false, true, true);
    pub const W: Self = Self::raw(true, false, false);
    pub const WE: Self = Self::raw(true, true, false);
    pub const WEC: Self = Self::raw(true, true, true);

    /// The six admissible rule sets, bottom of the lattice first.
    pub const ALL: [Self; 6] = [Self::NONE, Self::E, Self::EC, Self::W, Self::WE, Self::WEC];

    const fn raw(weakening: bool, exchange: bool, contraction: bool) -> Self {
        Self { weakening, exchange, contraction }
    }

    pub fn new(weakening: bool, exchange: bool, contraction: bool) -> Result<Self, LanguageError> {
        if contraction && !exchange {
            return Err(LanguageError::ContractionWithoutExchange);
        }
        Ok(Self::raw(weakening, exchange, contraction))
    }

    pub fn weakening(self) -> bool {
        self.weakening
    }

    pub fn exchange(self) -> bool {
        self.exchange
    }

    pub fn contraction(self) -> bool {
        self.contraction
    }

    /// All three rules: the cartesian case.
    pub fn is_cartesian(self) -> bool {
        self == Self::WEC
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        (!self.weakening || other.weakening)
            && (!self.exchange || other.exchange)
            && (!self.contraction || other.contraction)
    }
}

impl fmt::Display for StructuralRules {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::NONE {
            return f.write_str("∅");
        }
        for (on, c) in [(self.weakening, 'w'), (self.exchange, 'e'), (self.contraction, 'c')] {
            if on {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for StructuralRules {
    type Err = LanguageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (mut w, mut e, mut c) = (false, false, false);
        for ch in s.trim().chars() {
            match ch {
                'w' => w = true,
                'e' => e = true,
                'c' => c = true,
                '∅' | '-' | '0' => {}
                other => return Err(LanguageError::UnknownRule(other)),
            }
        }
        Self::new(w, e, c)
    }
}

impl TryFrom<String> for StructuralRules {
    type Error = LanguageError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<StructuralRules> for String {
    fn from(r: StructuralRules) -> Self {
        r.to_string()
    }
}

/// Function symbols beyond the constants 0 and 1, which every signature has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Signature {
    join: bool,
    meet: bool,
    reversal: bool,
}

impl Signature {
    pub const EMPTY: Self = Self::raw(false, false, false);
    pub const REV: Self = Self::raw(false, false, true);
    pub const JOIN: Self = Self::raw(true, false, false);
    pub const MEET: Self = Self::raw(false, true, false);
    pub const LATTICE: Self = Self::raw(true, true, false);
    pub const FULL: Self = Self::raw(true, true, true);

    /// The six admissible signatures, in the column order of the usual table.
    pub const ALL: [Self; 6] = [Self::EMPTY, Self::REV, Self::JOIN, Self::MEET, Self::LATTICE, Self::FULL];

    const fn raw(join: bool, meet: bool, reversal: bool) -> Self {
        Self { join, meet, reversal }
    }

    pub fn new(join: bool, meet: bool, reversal: bool) -> Result<Self, LanguageError> {
        let s = Self::raw(join, meet, reversal);
        if reversal && (join != meet) {
            return Err(LanguageError::InvalidSignature);
        }
        Ok(s)
    }

    pub fn has_join(self) -> bool {
        self.join
    }

    pub fn has_meet(self) -> bool {
        self.meet
    }

    pub fn has_reversal(self) -> bool {
        self.reversal
    }

    pub fn has_connection(self) -> bool {
        self.join || self.meet
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        (!self.join || other.join) && (!self.meet || other.meet) && (!self.reversal || other.reversal)
    }

    /// ASCII spelling used on the command line: `j`, `m`, `r`, or `∅`.
    pub fn ascii(self) -> String {
        if self == Self::EMPTY {
            return "∅".into();
        }
        let mut s = String::new();
        for (on, c) in [(self.join, 'j'), (self.meet, 'm'), (self.reversal, 'r')] {
            if on {
                s.push(c);
            }
        }
        s
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::EMPTY {
            return f.write_str("∅");
        }
        for (on, c) in [(self.join, "∨"), (self.meet, "∧"), (self.reversal, "′")] {
            if on {
                f.write_str(c)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = LanguageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (mut j, mut m, mut r) = (false, false, false);
        for ch in s.trim().chars() {
            match ch {
                'j' | '∨' => j = true,
                'm' | '∧' => m = true,
                'r' | '′' | '\'' => r = true,
                '∅' | '-' | '0' | ' ' => {}
                other => return Err(LanguageError::UnknownSymbol(other)),
            }
        }
        Self::new(j, m, r)
    }
}

impl TryFrom<String> for Signature {
    type Error = LanguageError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Signature> for String {
    fn from(s: Signature) -> Self {
        s.ascii()
    }
}

/// One of the 36 languages `L_(a,b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Language {
    pub rules: StructuralRules,
    pub signature: Signature,
}

impl Language {
    pub const FULL: Self = Self { rules: StructuralRules::WEC, signature: Signature::FULL };

    pub fn new(rules: StructuralRules, signature: Signature) -> Self {
        Self { rules, signature }
    }

    pub fn all() -> impl Iterator<Item = Language> {
        StructuralRules::ALL
            .into_iter()
            .flat_map(|r| Signature::ALL.into_iter().map(move |s| Language::new(r, s)))
    }

    pub fn is_full(self) -> bool {
        self == Self::FULL
    }

    pub fn is_sublanguage_of(self, other: Self) -> bool {
        self.rules.is_subset_of(other.rules) && self.signature.is_subset_of(other.signature)
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.rules, self.signature)
    }
}
