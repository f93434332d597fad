use crate::coxeter::{CoxeterMatrix, Gen};
use crate::error::{Error, Result};
use crate::roots::{RootId, RootRef, RootRegistry, RootSpace, SmallRootTable, DEFAULT_SMALL_ROOT_CAP};

/// A Coxeter system with its root data: the exact root space, the small
/// roots, and a registry of every positive root met so far.
///
/// Registry ids `0..rank` are the simple roots and ids `0..|Sigma|` are the
/// small roots, in [`SmallRootTable`] order.
#[derive(Debug)]
pub struct CoxeterSystem {
    space: RootSpace,
    small: SmallRootTable,
    registry: RootRegistry,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        Self::with_cap(matrix, DEFAULT_SMALL_ROOT_CAP)
    }

    pub fn with_cap(matrix: CoxeterMatrix, small_root_cap: usize) -> Result<Self> {
        let space = RootSpace::new(matrix);
        let small = SmallRootTable::enumerate(&space, small_root_cap)?;
        let registry = RootRegistry::seeded(space.rank(), small.roots());
        Ok(Self { space, small, registry })
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        self.space.matrix()
    }

    pub fn space(&self) -> &RootSpace {
        &self.space
    }

    pub fn small_roots(&self) -> &SmallRootTable {
        &self.small
    }

    pub fn registry(&self) -> &RootRegistry {
        &self.registry
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + Clone + '_ {
        self.matrix().generators()
    }

    #[inline]
    pub fn is_small(&self, id: RootId) -> bool {
        (id as usize) < self.small.len()
    }

    /// The generator whose simple root has this id, if any.
    #[inline]
    pub fn simple_of(&self, id: RootId) -> Option<Gen> {
        ((id as usize) < self.rank()).then_some(Gen(id as u8))
    }

    #[inline]
    pub(crate) fn reflect(&self, s: Gen, r: RootRef) -> RootRef {
        self.registry.reflect(&self.space, s, r)
    }

    /// Parses a word: names separated by whitespace or commas. When every
    /// generator name is a single character, a token may also be a compact
    /// run such as `121`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Gen>> {
        let compact = self.matrix().names().iter().all(|n| n.chars().count() == 1);
        let mut word = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            if let Ok(s) = self.matrix().generator(token) {
                word.push(s);
            } else if compact {
                for c in token.chars() {
                    word.push(self.matrix().generator(c.encode_utf8(&mut [0; 4]))?);
                }
            } else {
                return Err(Error::UnknownGenerator(token.to_string()));
            }
        }
        Ok(word)
    }

    /// Generator names separated by spaces.
    pub fn format_word(&self, word: &[Gen]) -> String {
        word.iter().map(|&s| self.matrix().name(s)).collect::<Vec<_>>().join(" ")
    }

    /// Group-element notation: `s1 s3 s2` for numeric names, `1` for the identity.
    pub fn format_element_word(&self, word: &[Gen]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter()
            .map(|&s| {
                let name = self.matrix().name(s);
                if name.chars().all(|c| c.is_ascii_digit()) {
                    format!("s{name}")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Inverse of [`format_element_word`](Self::format_element_word); bare
    /// generator names are accepted too, except that `1` alone is the identity.
    pub fn parse_element_word(&self, text: &str) -> Result<Vec<Gen>> {
        if text.trim() == "1" {
            return Ok(Vec::new());
        }
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|token| {
                self.matrix()
                    .generator(token)
                    .or_else(|e| token.strip_prefix('s').and_then(|rest| self.matrix().generator(rest).ok()).ok_or(e))
            })
            .collect()
    }
}
