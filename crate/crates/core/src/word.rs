use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::Vertex;

/// A finite sequence of vertex ids, applied left to right as local inversions.
///
/// Words are not tied to a graph; letters are validated when applied.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Vertex>);

impl Word {
    pub fn new(letters: Vec<Vertex>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn push(&mut self, v: Vertex) {
        self.0.push(v);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn check(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(Error::InvalidVertex { vertex, n }),
            None => Ok(()),
        }
    }

    /// Free reduction: cancels adjacent equal letters until none remain.
    ///
    /// A single stack pass yields the normal form, since `aa -> ε` is
    /// terminating and confluent.
    pub fn reduce(&self) -> Word {
        let mut stack: Vec<Vertex> = Vec::with_capacity(self.0.len());
        for &v in &self.0 {
            if stack.last() == Some(&v) {
                stack.pop();
            } else {
                stack.push(v);
            }
        }
        Word(stack)
    }

    /// Renders letters through a label table, e.g. `a,b,a`. Ids without a
    /// label fall back to the number.
    pub fn display_with(&self, labels: &[String]) -> String {
        self.0
            .iter()
            .map(|&v| labels.get(v).cloned().unwrap_or_else(|| v.to_string()))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl From<Vec<Vertex>> for Word {
    fn from(letters: Vec<Vertex>) -> Self {
        Word(letters)
    }
}

impl<const N: usize> From<[Vertex; N]> for Word {
    fn from(letters: [Vertex; N]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<Vertex> for Word {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Comma separated ids: `0,1,0`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{self}]")
    }
}
