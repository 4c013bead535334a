use thiserror::Error;

use super::laws::{self, StructureReport, Table};
use crate::structures::{validate_carrier, validate_table, AxiomId, AxiomWitness, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error(transparent)]
    Malformed(#[from] StructureError),
    #[error("input is not a valid {kind}: `{law}` fails at {witness:?}")]
    Invalid {
        kind: &'static str,
        law: String,
        witness: Vec<usize>,
    },
    #[error("multiplication is left- but not right-distributive (fails at {witness:?}); near-rings here are right near-rings")]
    LeftDistributiveOnly { witness: Vec<usize> },
    #[error("near-ring is not flagged as characteristic 2")]
    NotCharacteristicTwo,
    #[error("precondition {axiom} fails{}", witness.as_ref().map(|w| format!(": {} at {}", w.identity, w.assignment)).unwrap_or_default())]
    Precondition {
        axiom: AxiomId,
        witness: Option<AxiomWitness>,
    },
}

pub(crate) fn require(kind: &'static str, report: &StructureReport) -> Result<(), ClassicalError> {
    match report.first_failure() {
        None => Ok(()),
        Some(l) => Err(ClassicalError::Invalid {
            kind,
            law: l.law.clone(),
            witness: l.witness.clone().unwrap_or_default(),
        }),
    }
}

fn labels_ok(labels: &Option<Vec<String>>, size: usize) -> Result<(), StructureError> {
    match labels {
        Some(l) if l.len() != size => Err(StructureError::LabelCount {
            expected: size,
            found: l.len(),
        }),
        _ => Ok(()),
    }
}

/// Bounded distributive lattice with a de Morgan involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeMorganAlgebra {
    pub size: usize,
    pub meet: Vec<usize>,
    pub join: Vec<usize>,
    pub bar: Vec<usize>,
    pub zero: usize,
    pub one: usize,
    pub labels: Option<Vec<String>>,
}

impl DeMorganAlgebra {
    /// Checks table shapes only; the algebraic laws are checked by
    /// [`DeMorganAlgebra::check`] and by every conversion.
    pub fn new(
        size: usize,
        meet: Vec<usize>,
        join: Vec<usize>,
        bar: Vec<usize>,
        zero: usize,
        one: usize,
        labels: Option<Vec<String>>,
    ) -> Result<DeMorganAlgebra, StructureError> {
        validate_carrier(size, zero, one)?;
        validate_table("meet", &meet, size, size * size)?;
        validate_table("join", &join, size, size * size)?;
        validate_table("bar", &bar, size, size)?;
        labels_ok(&labels, size)?;
        Ok(DeMorganAlgebra { size, meet, join, bar, zero, one, labels })
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    pub fn check(&self) -> StructureReport {
        let meet = Table::new(self.size, &self.meet);
        let join = Table::new(self.size, &self.join);
        let mut laws = laws::distributive_lattice(meet, join, self.zero, self.one);
        laws.push(laws::involution(&self.bar));
        laws.push(laws::de_morgan_law(meet, join, &self.bar));
        StructureReport { kind: "de-morgan".into(), laws }
    }

    /// Complement laws on top of [`DeMorganAlgebra::check`].
    pub fn check_boolean(&self) -> StructureReport {
        let mut r = self.check();
        r.kind = "boolean".into();
        r.laws.extend(laws::complement_laws(
            Table::new(self.size, &self.meet),
            Table::new(self.size, &self.join),
            &self.bar,
            self.zero,
            self.one,
        ));
        r
    }
}

/// A de Morgan algebra whose involution is a Boolean complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanAlgebra(DeMorganAlgebra);

impl BooleanAlgebra {
    pub fn new(d: DeMorganAlgebra) -> Result<BooleanAlgebra, ClassicalError> {
        require("Boolean algebra", &d.check_boolean())?;
        Ok(BooleanAlgebra(d))
    }

    pub fn as_demorgan(&self) -> &DeMorganAlgebra {
        &self.0
    }

    pub fn into_demorgan(self) -> DeMorganAlgebra {
        self.0
    }

    pub fn check(&self) -> StructureReport {
        self.0.check_boolean()
    }
}

/// MV-algebra `(X, o, bar, 0)`. Multiplication is always derived:
/// `x . y = bar(bar y o bar x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVAlgebra {
    pub size: usize,
    pub circ: Vec<usize>,
    pub bar: Vec<usize>,
    pub zero: usize,
    pub labels: Option<Vec<String>>,
}

impl MVAlgebra {
    pub fn new(
        size: usize,
        circ: Vec<usize>,
        bar: Vec<usize>,
        zero: usize,
        labels: Option<Vec<String>>,
    ) -> Result<MVAlgebra, StructureError> {
        if size < 2 {
            return Err(StructureError::SizeTooSmall(size));
        }
        if zero >= size {
            return Err(StructureError::ConstantOutOfRange { name: "zero", value: zero, size });
        }
        validate_table("circ", &circ, size, size * size)?;
        validate_table("bar", &bar, size, size)?;
        labels_ok(&labels, size)?;
        Ok(MVAlgebra { size, circ, bar, zero, labels })
    }

    pub fn one(&self) -> usize {
        self.bar[self.zero]
    }

    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ[a * self.size + b]
    }

    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.bar[self.circ(self.bar[b], self.bar[a])]
    }

    /// `x v y = x o (y . bar x)`
    pub fn vee(&self, a: usize, b: usize) -> usize {
        self.circ(a, self.dot(b, self.bar[a]))
    }

    /// `x ^ y = (bar y o x) . y`
    pub fn wedge(&self, a: usize, b: usize) -> usize {
        self.dot(self.circ(self.bar[b], a), b)
    }

    pub fn table(&self, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
        (0..self.size * self.size).map(|i| f(i / self.size, i % self.size)).collect()
    }

    /// M1-M5. Commutativity of `o` is not assumed.
    pub fn check(&self) -> StructureReport {
        let n = self.size;
        let c = |a, b| self.circ(a, b);
        let bar = &self.bar;
        let z = self.zero;
        let laws = vec![
            laws::law(n, "M1", 3, |v| c(v[0], c(v[1], v[2])) == c(c(v[0], v[1]), v[2])),
            laws::law(n, "M2", 1, |v| c(z, v[0]) == v[0]),
            laws::law(n, "M3", 1, |v| bar[bar[v[0]]] == v[0]),
            laws::law(n, "M4", 1, |v| c(bar[z], v[0]) == bar[z]),
            laws::law(n, "M5", 2, |v| {
                let (x, y) = (v[0], v[1]);
                c(x, bar[c(x, bar[y])]) == c(y, bar[c(y, bar[x])])
            }),
            laws::law(n, "0 != 1", 0, |_| bar[z] != z),
        ];
        StructureReport { kind: "mv".into(), laws }
    }

    pub fn is_boolean(&self) -> bool {
        (0..self.size).all(|x| self.circ(x, x) == x)
    }
}

/// Unitary ring of characteristic 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring2 {
    pub size: usize,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
    pub zero: usize,
    pub one: usize,
    pub labels: Option<Vec<String>>,
}

impl Ring2 {
    pub fn new(
        size: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Ring2, StructureError> {
        validate_carrier(size, zero, one)?;
        validate_table("add", &add, size, size * size)?;
        validate_table("mul", &mul, size, size * size)?;
        labels_ok(&labels, size)?;
        Ok(Ring2 { size, add, mul, zero, one, labels })
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn check(&self) -> StructureReport {
        StructureReport {
            kind: "ring2".into(),
            laws: laws::ring2_laws(
                Table::new(self.size, &self.add),
                Table::new(self.size, &self.mul),
                self.zero,
                self.one,
            ),
        }
    }

    /// A char-2 ring is in particular a near-ring.
    pub fn to_nearring(&self) -> NearRing {
        NearRing {
            size: self.size,
            add: self.add.clone(),
            mul: self.mul.clone(),
            zero: self.zero,
            one: self.one,
            char2: true,
            labels: self.labels.clone(),
        }
    }
}

/// Unitary right near-ring with Abelian addition and `a*0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearRing {
    pub size: usize,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
    pub zero: usize,
    pub one: usize,
    pub char2: bool,
    pub labels: Option<Vec<String>>,
}

impl NearRing {
    pub fn new(
        size: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        char2: bool,
        labels: Option<Vec<String>>,
    ) -> Result<NearRing, StructureError> {
        validate_carrier(size, zero, one)?;
        validate_table("add", &add, size, size * size)?;
        validate_table("mul", &mul, size, size * size)?;
        labels_ok(&labels, size)?;
        Ok(NearRing { size, add, mul, zero, one, char2, labels })
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn check(&self) -> StructureReport {
        StructureReport {
            kind: "near-ring".into(),
            laws: laws::nearring_laws(
                Table::new(self.size, &self.add),
                Table::new(self.size, &self.mul),
                self.zero,
                self.one,
                self.char2,
            ),
        }
    }

    /// Full validation. A table that is only left-distributive gets its own
    /// error.
    pub fn validate(&self) -> Result<(), ClassicalError> {
        let report = self.check();
        if let Some(l) = report.law("right distributivity").filter(|l| !l.holds) {
            let add = Table::new(self.size, &self.add);
            let mul = Table::new(self.size, &self.mul);
            if laws::left_distributive(mul, add).holds {
                return Err(ClassicalError::LeftDistributiveOnly {
                    witness: l.witness.clone().unwrap_or_default(),
                });
            }
        }
        require("near-ring", &report)
    }

    /// Additive inverses, derived once from the addition table.
    pub fn negation(&self) -> Option<Vec<usize>> {
        (0..self.size)
            .map(|a| (0..self.size).find(|&b| self.add(a, b) == self.zero))
            .collect()
    }

    pub fn is_ring(&self) -> bool {
        laws::left_distributive(Table::new(self.size, &self.mul), Table::new(self.size, &self.add)).holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::fixtures;

    #[test]
    fn divisors_of_six_are_de_morgan() {
        let d = fixtures::divisor_lattice(6);
        assert!(d.check().holds());
        // 6 is square-free, so the involution is even a Boolean complement
        assert!(d.check_boolean().holds());
        let d12 = fixtures::divisor_lattice(12);
        assert!(d12.check().holds());
        assert!(!d12.check_boolean().holds());
    }

    #[test]
    fn lukasiewicz_chains_are_mv() {
        for n in 2..=6 {
            let m = fixtures::lukasiewicz(n);
            assert!(m.check().holds(), "L{n}");
            assert_eq!(m.is_boolean(), n == 2);
        }
    }

    #[test]
    fn four_element_near_ring_is_valid() {
        let nr = fixtures::nearring4();
        nr.validate().unwrap();
        assert!(nr.check().holds());
        let (u, v) = (1, 2);
        assert_ne!(nr.mul(u, v), nr.mul(v, u));
        assert_ne!(nr.mul(u, u), u);
        assert!(!nr.is_ring());
    }

    #[test]
    fn left_near_ring_is_rejected_by_name() {
        // transpose of the right near-ring's multiplication
        let nr = fixtures::nearring4();
        let n = nr.size;
        let mul_t: Vec<usize> = (0..n * n).map(|i| nr.mul(i % n, i / n)).collect();
        let left = NearRing { mul: mul_t, ..nr };
        assert!(matches!(left.validate(), Err(ClassicalError::LeftDistributiveOnly { .. })));
    }

    #[test]
    fn malformed_tables_are_errors() {
        assert!(matches!(
            DeMorganAlgebra::new(2, vec![0; 3], vec![0; 4], vec![1, 0], 0, 1, None),
            Err(StructureError::WrongTableLength { .. })
        ));
        assert!(MVAlgebra::new(2, vec![0, 1, 1, 1], vec![1, 0], 2, None).is_err());
    }

    #[test]
    fn z2_squared_is_boolean_algebra() {
        let b = fixtures::boolean_algebra(2);
        assert!(b.check().holds());
        let kleene = fixtures::kleene3();
        assert!(BooleanAlgebra::new(kleene).is_err());
    }
}
