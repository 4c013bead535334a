//! Law checks over binary operation tables, shared by every classical type
//! and by the verifier (which applies them to tables read off ternary
//! systems).

use serde::Serialize;

use crate::structures::first_failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub kind: String,
    pub laws: Vec<LawReport>,
}

impl StructureReport {
    pub fn holds(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }

    pub fn first_failure(&self) -> Option<&LawReport> {
        self.laws.iter().find(|l| !l.holds)
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.law == name)
    }
}

pub(crate) fn law(n: usize, name: &str, arity: usize, ok: impl Fn(&[usize]) -> bool) -> LawReport {
    let witness = first_failure(n, arity, ok);
    LawReport {
        law: name.to_string(),
        holds: witness.is_none(),
        witness,
    }
}

/// A square operation table over `0..n`.
#[derive(Clone, Copy)]
pub struct Table<'a> {
    pub n: usize,
    pub cells: &'a [usize],
}

impl<'a> Table<'a> {
    pub fn new(n: usize, cells: &'a [usize]) -> Table<'a> {
        debug_assert_eq!(cells.len(), n * n);
        Table { n, cells }
    }

    #[inline]
    pub fn at(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }
}

pub fn commutative(name: &str, t: Table) -> LawReport {
    law(t.n, &format!("{name} commutative"), 2, |v| t.at(v[0], v[1]) == t.at(v[1], v[0]))
}

pub fn associative(name: &str, t: Table) -> LawReport {
    law(t.n, &format!("{name} associative"), 3, |v| {
        t.at(t.at(v[0], v[1]), v[2]) == t.at(v[0], t.at(v[1], v[2]))
    })
}

pub fn idempotent(name: &str, t: Table) -> LawReport {
    law(t.n, &format!("{name} idempotent"), 1, |v| t.at(v[0], v[0]) == v[0])
}

pub fn left_unit(name: &str, t: Table, e: usize) -> LawReport {
    law(t.n, &format!("{name} left unit"), 1, |v| t.at(e, v[0]) == v[0])
}

pub fn right_unit(name: &str, t: Table, e: usize) -> LawReport {
    law(t.n, &format!("{name} right unit"), 1, |v| t.at(v[0], e) == v[0])
}

/// `a * (b + c) = a*b + a*c`
pub fn left_distributive(mul: Table, add: Table) -> LawReport {
    law(mul.n, "left distributivity", 3, |v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        mul.at(a, add.at(b, c)) == add.at(mul.at(a, b), mul.at(a, c))
    })
}

/// `(a + b) * c = a*c + b*c`
pub fn right_distributive(mul: Table, add: Table) -> LawReport {
    law(mul.n, "right distributivity", 3, |v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        mul.at(add.at(a, b), c) == add.at(mul.at(a, c), mul.at(b, c))
    })
}

/// Commutative group laws for `add` with identity `zero`.
pub fn abelian_group(add: Table, zero: usize) -> Vec<LawReport> {
    vec![
        commutative("+", add),
        associative("+", add),
        right_unit("+", add, zero),
        law(add.n, "+ inverses", 1, |v| (0..add.n).any(|b| add.at(v[0], b) == zero)),
    ]
}

pub fn characteristic_two(add: Table, zero: usize) -> LawReport {
    law(add.n, "characteristic 2", 1, |v| add.at(v[0], v[0]) == zero)
}

pub fn unital_monoid(name: &str, t: Table, e: usize) -> Vec<LawReport> {
    vec![associative(name, t), left_unit(name, t, e), right_unit(name, t, e)]
}

/// Unitary ring of characteristic 2.
pub fn ring2_laws(add: Table, mul: Table, zero: usize, one: usize) -> Vec<LawReport> {
    let mut laws = abelian_group(add, zero);
    laws.push(characteristic_two(add, zero));
    laws.extend(unital_monoid("*", mul, one));
    laws.push(left_distributive(mul, add));
    laws.push(right_distributive(mul, add));
    laws
}

/// Unitary right near-ring with Abelian addition and `a*0 = 0`.
pub fn nearring_laws(add: Table, mul: Table, zero: usize, one: usize, char2: bool) -> Vec<LawReport> {
    let mut laws = abelian_group(add, zero);
    if char2 {
        laws.push(characteristic_two(add, zero));
    }
    laws.extend(unital_monoid("*", mul, one));
    laws.push(right_distributive(mul, add));
    laws.push(law(mul.n, "a*0 = 0", 1, |v| mul.at(v[0], zero) == zero));
    laws
}

/// Bounded distributive lattice with meet `meet`, join `join`, bottom `zero`
/// and top `one`.
pub fn distributive_lattice(meet: Table, join: Table, zero: usize, one: usize) -> Vec<LawReport> {
    let mut laws = lattice(meet, join);
    laws.push(law(meet.n, "meet distributes over join", 3, |v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        meet.at(a, join.at(b, c)) == join.at(meet.at(a, b), meet.at(a, c))
    }));
    laws.push(law(meet.n, "join distributes over meet", 3, |v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        join.at(a, meet.at(b, c)) == meet.at(join.at(a, b), join.at(a, c))
    }));
    laws.push(right_unit("meet", meet, one));
    laws.push(right_unit("join", join, zero));
    laws
}

/// Lattice laws without bounds or distributivity.
pub fn lattice(meet: Table, join: Table) -> Vec<LawReport> {
    vec![
        commutative("meet", meet),
        commutative("join", join),
        associative("meet", meet),
        associative("join", join),
        idempotent("meet", meet),
        idempotent("join", join),
        law(meet.n, "absorption a.(a o b) = a", 2, |v| meet.at(v[0], join.at(v[0], v[1])) == v[0]),
        law(meet.n, "absorption a o (a.b) = a", 2, |v| join.at(v[0], meet.at(v[0], v[1])) == v[0]),
    ]
}

pub fn involution(bar: &[usize]) -> LawReport {
    law(bar.len(), "involution", 1, |v| bar[bar[v[0]]] == v[0])
}

pub fn de_morgan_law(meet: Table, join: Table, bar: &[usize]) -> LawReport {
    law(meet.n, "de Morgan law", 2, |v| bar[meet.at(v[0], v[1])] == join.at(bar[v[1]], bar[v[0]]))
}

pub fn complement_laws(meet: Table, join: Table, bar: &[usize], zero: usize, one: usize) -> Vec<LawReport> {
    vec![
        law(meet.n, "a . bar(a) = 0", 1, |v| meet.at(v[0], bar[v[0]]) == zero),
        law(meet.n, "a o bar(a) = 1", 1, |v| join.at(v[0], bar[v[0]]) == one),
    ]
}
