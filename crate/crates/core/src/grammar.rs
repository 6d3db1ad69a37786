//! Grammars in Chen's sense and the formal derivative they induce.
//!
//! A grammar assigns a polynomial to each ruled letter. The derivative `D`
//! extends the rules linearly and by the Leibniz rule; letters declared
//! constant differentiate to zero. A letter that is neither ruled nor
//! declared constant is an error.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{Letter, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("letter `{0}` has no rule and is not declared constant")]
    UnknownLetter(Letter),
    #[error("letter `{0}` has more than one rule")]
    DuplicateRule(Letter),
    #[error("letter `{0}` is both ruled and declared constant")]
    RuledConstant(Letter),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<Letter, Polynomial>,
    constants: BTreeSet<Letter>,
}

impl Grammar {
    /// Validates that every right-hand-side letter is ruled or constant.
    pub fn new(
        rules: impl IntoIterator<Item = (Letter, Polynomial)>,
        constants: impl IntoIterator<Item = Letter>,
    ) -> Result<Self, GrammarError> {
        let mut map = BTreeMap::new();
        for (l, p) in rules {
            if map.contains_key(&l) {
                return Err(GrammarError::DuplicateRule(l));
            }
            map.insert(l, p);
        }
        let constants: BTreeSet<Letter> = constants.into_iter().collect();
        if let Some(l) = constants.iter().find(|l| map.contains_key(*l)) {
            return Err(GrammarError::RuledConstant(l.clone()));
        }
        let g = Grammar {
            rules: map,
            constants,
        };
        for rhs in g.rules.values() {
            g.check_letters(rhs)?;
        }
        Ok(g)
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Letter, &Polynomial)> {
        self.rules.iter()
    }

    pub fn rule(&self, l: &Letter) -> Option<&Polynomial> {
        self.rules.get(l)
    }

    pub fn constants(&self) -> impl Iterator<Item = &Letter> {
        self.constants.iter()
    }

    pub fn is_constant(&self, l: &Letter) -> bool {
        self.constants.contains(l)
    }

    /// Returns a copy with the rule for `l` replaced.
    pub fn with_rule(&self, l: Letter, rhs: Polynomial) -> Result<Self, GrammarError> {
        let mut rules = self.rules.clone();
        rules.insert(l, rhs);
        Grammar::new(rules, self.constants.iter().cloned())
    }

    pub fn check_letters(&self, p: &Polynomial) -> Result<(), GrammarError> {
        for l in p.letters() {
            if !self.rules.contains_key(&l) && !self.constants.contains(&l) {
                return Err(GrammarError::UnknownLetter(l));
            }
        }
        Ok(())
    }

    /// One application of the formal derivative.
    pub fn derive(&self, p: &Polynomial) -> Result<Polynomial, GrammarError> {
        self.check_letters(p)?;
        Ok(self.derive_unchecked(p))
    }

    // Callers guarantee every letter is known.
    fn derive_unchecked(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            for (l, e) in m.exponents() {
                let Some(rhs) = self.rules.get(l) else {
                    continue;
                };
                let rest = m.without_one(l).expect("letter occurs in monomial");
                out += rhs.mul_monomial(&rest, &(c * BigInt::from(e)));
            }
        }
        out
    }

    /// `D^n(p)`; `n = 0` returns `p` unchanged.
    pub fn derive_n(&self, p: &Polynomial, n: usize) -> Result<Polynomial, GrammarError> {
        self.check_letters(p)?;
        let mut cur = p.clone();
        for _ in 0..n {
            cur = self.derive_unchecked(&cur);
        }
        Ok(cur)
    }

    /// `[D^0(p), D^1(p), ..., D^n(p)]`.
    pub fn derive_levels(&self, p: &Polynomial, n: usize) -> Result<Vec<Polynomial>, GrammarError> {
        self.check_letters(p)?;
        let mut levels = Vec::with_capacity(n + 1);
        levels.push(p.clone());
        for k in 0..n {
            let next = self.derive_unchecked(&levels[k]);
            levels.push(next);
        }
        Ok(levels)
    }
}
