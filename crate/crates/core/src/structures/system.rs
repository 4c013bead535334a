use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("carrier size must be at least 2, got {0}")]
    SizeTooSmall(usize),
    #[error("carrier size {0} exceeds the supported maximum of 255")]
    SizeTooLarge(usize),
    #[error("constants 0 and 1 must be distinct elements (both are {0})")]
    ConstantClash(usize),
    #[error("constant {name} = {value} is outside the carrier of size {size}")]
    ConstantOutOfRange { name: &'static str, value: usize, size: usize },
    #[error("table entry {index} has value {value}, outside the carrier of size {size}")]
    EntryOutOfRange { index: usize, value: usize, size: usize },
    #[error("{table} table has {found} entries, expected {expected}")]
    WrongTableLength { table: &'static str, expected: usize, found: usize },
    #[error("{found} labels given for a carrier of size {expected}")]
    LabelCount { expected: usize, found: usize },
}

/// A finite system `(A, p, 0, 1)`.
///
/// Elements are the indices `0..size`. The value `p(a, b, c)` lives at
/// `(a * n + b) * n + c` in the flat table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernarySystem {
    size: usize,
    zero: usize,
    one: usize,
    table: Vec<u8>,
    labels: Option<Vec<String>>,
}

impl TernarySystem {
    pub fn new(size: usize, zero: usize, one: usize, p: Vec<usize>) -> Result<TernarySystem, StructureError> {
        validate_carrier(size, zero, one)?;
        validate_table("p", &p, size, size * size * size)?;
        Ok(TernarySystem {
            size,
            zero,
            one,
            table: p.into_iter().map(|x| x as u8).collect(),
            labels: None,
        })
    }

    pub fn from_fn(
        size: usize,
        zero: usize,
        one: usize,
        f: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<TernarySystem, StructureError> {
        let mut p = Vec::with_capacity(size * size * size);
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    p.push(f(a, b, c));
                }
            }
        }
        TernarySystem::new(size, zero, one, p)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<TernarySystem, StructureError> {
        if labels.len() != self.size {
            return Err(StructureError::LabelCount {
                expected: self.size,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn with_labels_opt(self, labels: Option<Vec<String>>) -> TernarySystem {
        match labels {
            Some(l) if l.len() == self.size => TernarySystem { labels: Some(l), ..self },
            _ => self,
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn p(&self, a: usize, b: usize, c: usize) -> usize {
        self.table[(a * self.size + b) * self.size + c] as usize
    }

    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&x| x as usize).collect()
    }

    pub fn raw_table(&self) -> &[u8] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Same system with every entry changed at one position; used for
    /// mutation tests and by the search when materialising tables.
    pub fn with_entry(&self, a: usize, b: usize, c: usize, value: usize) -> Result<TernarySystem, StructureError> {
        let mut p = self.table();
        p[(a * self.size + b) * self.size + c] = value;
        Ok(TernarySystem::new(self.size, self.zero, self.one, p)?.with_labels_opt(self.labels.clone()))
    }

    /// Image of the system under the bijection `perm` (element `x` becomes
    /// `perm[x]`).
    pub fn relabel(&self, perm: &[usize]) -> TernarySystem {
        let n = self.size;
        let mut p = vec![0usize; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    p[(perm[a] * n + perm[b]) * n + perm[c]] = perm[self.p(a, b, c)];
                }
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for (x, &y) in perm.iter().enumerate() {
                out[y] = l[x].clone();
            }
            out
        });
        TernarySystem::new(n, perm[self.zero], perm[self.one], p)
            .expect("relabelling a valid system")
            .with_labels_opt(labels)
    }

    /// Same operation table, labels dropped. Equality of systems compares
    /// labels too, so round-trip checks use this.
    pub fn unlabeled(&self) -> TernarySystem {
        TernarySystem { labels: None, ..self.clone() }
    }
}

pub(crate) fn validate_carrier(size: usize, zero: usize, one: usize) -> Result<(), StructureError> {
    if size < 2 {
        return Err(StructureError::SizeTooSmall(size));
    }
    if size > 255 {
        return Err(StructureError::SizeTooLarge(size));
    }
    if zero >= size {
        return Err(StructureError::ConstantOutOfRange { name: "zero", value: zero, size });
    }
    if one >= size {
        return Err(StructureError::ConstantOutOfRange { name: "one", value: one, size });
    }
    if zero == one {
        return Err(StructureError::ConstantClash(zero));
    }
    Ok(())
}

pub(crate) fn validate_table(
    name: &'static str,
    table: &[usize],
    size: usize,
    expected: usize,
) -> Result<(), StructureError> {
    if table.len() != expected {
        return Err(StructureError::WrongTableLength {
            table: name,
            expected,
            found: table.len(),
        });
    }
    if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= size) {
        return Err(StructureError::EntryOutOfRange { index, value, size });
    }
    Ok(())
}
