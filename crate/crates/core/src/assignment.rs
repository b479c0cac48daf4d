use std::collections::BTreeMap;

use crate::error::EvalError;

/// Values for the variables of a formula.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Assignment<V> {
    values: BTreeMap<char, V>,
}

impl<V: Copy> Assignment<V> {
    pub fn new() -> Self {
        Self {
            values: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, name: char, value: V) -> Option<V> {
        self.values.insert(name, value)
    }

    pub fn with(mut self, name: char, value: V) -> Self {
        self.values.insert(name, value);
        self
    }

    pub fn get(&self, name: char) -> Option<V> {
        self.values.get(&name).copied()
    }

    pub fn lookup(&self, name: char) -> Result<V, EvalError> {
        self.get(name).ok_or(EvalError::MissingVariable(name))
    }

    pub fn iter(&self) -> impl Iterator<Item = (char, V)> + '_ {
        self.values.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl<V: Copy> FromIterator<(char, V)> for Assignment<V> {
    fn from_iter<I: IntoIterator<Item = (char, V)>>(iter: I) -> Self {
        Self {
            values: iter.into_iter().collect(),
        }
    }
}

/// Decodes row `index` of a table over `names` whose digits cycle through
/// `domain` with the first variable most significant.
pub(crate) fn grid_row<V: Copy>(names: &[char], domain: &[V], index: usize) -> Vec<V> {
    let base = domain.len();
    let mut digits = vec![domain[0]; names.len()];
    let mut rest = index;
    for slot in digits.iter_mut().rev() {
        *slot = domain[rest % base];
        rest /= base;
    }
    digits
}

pub(crate) fn zip_assignment<V: Copy>(names: &[char], values: &[V]) -> Assignment<V> {
    names.iter().copied().zip(values.iter().copied()).collect()
}

pub(crate) fn check_guard(found: usize, limit: usize) -> Result<(), EvalError> {
    if found > limit {
        Err(EvalError::TooManyVariables { found, limit })
    } else {
        Ok(())
    }
}
