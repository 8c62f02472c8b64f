use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A based vector space: a dimension and one name per basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    labels: Arc<[String]>,
}

impl Space {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::LabelClash(l.clone()));
            }
        }
        Ok(Space { labels: labels.into() })
    }

    /// `prefix0, prefix1, ..`
    pub fn numbered(prefix: &str, dim: usize) -> Self {
        Space { labels: (0..dim).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().into() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sub-space spanned by a subset of the basis, keeping labels.
    pub fn select(&self, indices: &[usize]) -> Result<Space> {
        let mut labels = Vec::with_capacity(indices.len());
        for &i in indices {
            let l = self.labels.get(i).ok_or(Error::IndexOutOfRange { index: i, dim: self.dim() })?;
            labels.push(l.clone());
        }
        Space::new(labels)
    }

    /// Drops `prefix` from every label that carries it.
    pub fn strip_prefix(&self, prefix: &str) -> Result<Space> {
        Space::new(self.labels.iter().map(|l| l.strip_prefix(prefix).unwrap_or(l).to_string()))
    }
}

/// `A ⊕ V` with labels `A.*` then `V.*`; the A-block occupies `[0, a.dim())`.
pub fn direct_sum_space(a: &Space, b: &Space) -> Result<Space> {
    direct_sum_with(a, "A", b, "V")
}

pub fn direct_sum_with(a: &Space, pa: &str, b: &Space, pb: &str) -> Result<Space> {
    Space::new(a.labels().iter().map(|l| format!("{pa}.{l}")).chain(b.labels().iter().map(|l| format!("{pb}.{l}"))))
}
