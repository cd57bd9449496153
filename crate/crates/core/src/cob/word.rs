use crate::error::CobError;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// An object of the cobordism category: a finite word of orientation signs.
/// The empty word is the unit object.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SignedWord(Vec<Sign>);

impl SignedWord {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignedWord(signs)
    }

    pub fn unit() -> Self {
        SignedWord(vec![])
    }

    /// The canonical generator word `X^{(i,j)}`: i pluses then j minuses.
    pub fn generator(i: usize, j: usize) -> Self {
        let mut signs = vec![Sign::Plus; i];
        signs.extend(std::iter::repeat(Sign::Minus).take(j));
        SignedWord(signs)
    }

    pub fn parse(s: &str) -> Result<Self, CobError> {
        if s == "1" {
            return Ok(Self::unit());
        }
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(CobError::BadWord(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignedWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sign(&self, k: usize) -> Sign {
        self.0[k]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn plus_count(&self) -> usize {
        self.0.iter().filter(|s| **s == Sign::Plus).count()
    }

    pub fn minus_count(&self) -> usize {
        self.len() - self.plus_count()
    }

    /// `#+ - #-`, the conserved quantity of Brauer diagrams.
    pub fn excess(&self) -> i64 {
        self.plus_count() as i64 - self.minus_count() as i64
    }

    pub fn tensor(&self, other: &SignedWord) -> SignedWord {
        let mut signs = self.0.clone();
        signs.extend_from_slice(&other.0);
        SignedWord(signs)
    }

    /// Word-level dual: reverse the sequence and flip every sign.
    pub fn dual(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|s| s.flip()).collect())
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for s in &self.0 {
            write!(f, "{}", if *s == Sign::Plus { '+' } else { '-' })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_roundtrip() {
        let w = SignedWord::parse("++-").unwrap();
        assert_eq!(w.to_string(), "++-");
        assert_eq!(w.excess(), 1);
        assert_eq!(SignedWord::unit().to_string(), "1");
        assert_eq!(SignedWord::parse("1").unwrap(), SignedWord::unit());
        assert!(SignedWord::parse("+x").is_err());
    }

    #[test]
    fn dual_reverses_and_flips() {
        let w = SignedWord::parse("++-").unwrap();
        assert_eq!(w.dual(), SignedWord::parse("+--").unwrap());
        assert_eq!(w.dual().dual(), w);
    }
}
