use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::structures::{AxiomId, BASE_AXIOMS, DE_MORGAN_AXIOMS, TERNARY_MV_AXIOMS};

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    LEMMA_2_2,
    LEMMA_2_3,
    LEMMA_2_4,
    LEMMA_2_5,
    LEMMA_2_6,
    PROP_3_1,
    THM_3_2,
    THM_4_1,
    THM_4_2,
    PROP_5_1,
    THM_5_2,
    THM_5_3,
    PROP_6_2,
    PROP_6_4,
    PROP_6_5,
    THM_6_6,
}

use TheoremId::*;

/// How per-case condition vectors are judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    /// Every condition has the same truth value.
    Equivalence,
    /// The first `premises` conditions imply the rest.
    Implication { premises: usize },
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        LEMMA_2_2, LEMMA_2_3, LEMMA_2_4, LEMMA_2_5, LEMMA_2_6, PROP_3_1, THM_3_2, THM_4_1, THM_4_2, PROP_5_1,
        THM_5_2, THM_5_3, PROP_6_2, PROP_6_4, PROP_6_5, THM_6_6,
    ];

    /// The equivalence theorems whose condition vectors must be constant.
    pub const EQUIVALENCES: [TheoremId; 4] = [THM_3_2, THM_4_1, THM_5_2, THM_5_3];

    pub fn name(self) -> &'static str {
        match self {
            LEMMA_2_2 => "LEMMA_2_2",
            LEMMA_2_3 => "LEMMA_2_3",
            LEMMA_2_4 => "LEMMA_2_4",
            LEMMA_2_5 => "LEMMA_2_5",
            LEMMA_2_6 => "LEMMA_2_6",
            PROP_3_1 => "PROP_3_1",
            THM_3_2 => "THM_3_2",
            THM_4_1 => "THM_4_1",
            THM_4_2 => "THM_4_2",
            PROP_5_1 => "PROP_5_1",
            THM_5_2 => "THM_5_2",
            THM_5_3 => "THM_5_3",
            PROP_6_2 => "PROP_6_2",
            PROP_6_4 => "PROP_6_4",
            PROP_6_5 => "PROP_6_5",
            THM_6_6 => "THM_6_6",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            LEMMA_2_2 => "If (A,p,0,1) satisfies T1-T4 then bar(1)=0, bar(0)=1, bar is an involution, \
                p(c,b,a)=p(a,bar(b),c), bar commutes with p in both listed ways, a.b=a^b and a o b=a v b, \
                the de Morgan laws hold between . and o, (A,.,1) and (A,o,0) are monoids, 0 absorbs . \
                and 1 absorbs o, (A,+,0) is a monoid, and a+1=bar(a)=1+a",
            LEMMA_2_3 => "Under T1-T4, if o is idempotent then a o (b . a) = a and (a o b) . a = a",
            LEMMA_2_4 => "Under T1-T4, if . and o are commutative and idempotent then they distribute over each other",
            LEMMA_2_5 => "Under T1-T4, a+a=0 implies a+b=b+a and (a+b).c = a.c + b.c",
            LEMMA_2_6 => "Under T1-T4, bar(a).a=0 and bar(a) o a=1 for every a imply a.a=a and a o a=a",
            PROP_3_1 => "Under T1-T4, p(0,a,b)=p(a,a,b) implies that (A,+,.,0,1) is a Boolean ring",
            THM_3_2 => "Under T1-T4 the following are equivalent: (i) (A,+,.,0,1) is a Boolean ring; \
                (ii) (A,o,.,bar,0,1) is a Boolean algebra; (iii) p(a,b,c) = (bar(b).a) o (b.c); \
                (iv) p(a,a,b) = a.b; (v) p(a,b,b) = a o b",
            THM_4_1 => "Under T1-T4 the following are equivalent: (i) (A,o,.,bar,0,1) is a de Morgan algebra; \
                (ii) (A,o,.) is a distributive lattice; (iii) (A,o) is a join-semilattice; \
                (iv) (A,.) is a meet-semilattice; (v) (A,o) is an idempotent commutative magma; \
                (vi) (A,.) is an idempotent commutative magma; \
                (vii) p(a,b,c) = (bar(b).a) o (a.c) o (b.c); (viii) p(a,b,c) = (bar(b) o c).(b o a).(a o c)",
            THM_4_2 => "Systems satisfying T1-T3, T4 and T5 (p(0,a,b)=p(0,b,a), p(0,a,a)=a) correspond one to one \
                with de Morgan algebras via a.b=p(0,a,b), a o b=p(a,b,1), bar(a)=p(1,a,0) and \
                p(a,b,c)=(bar(b).a) o (a.c) o (b.c); both round trips are the identity and the two \
                notions of morphism coincide",
            PROP_5_1 => "For a unitary Abelian right near-ring with a.0=0, p(a,b,c)=a+b(c-a) satisfies T1-T3",
            THM_5_2 => "Under T1-T4 the following are equivalent: (i) (A,+,.,0,1) is a unitary ring of \
                characteristic 2; (ii) p(a,b,c) = (bar(b).a) + (b.c); (iii) a.(b+c) = (a.b) + (a.c)",
            THM_5_3 => "Under T1-T4 the following are equivalent: (i) (A,+,.,0,1) is a unitary right near-ring of \
                characteristic 2; (ii) p(a,b,c) = a + (b.(a+c)); (iii) a+a=0; (iv) (a+b).c = (a.c) + (b.c)",
            PROP_6_2 => "In an MV-algebra with 1=bar(0), x.y=bar(bar(y) o bar(x)), x v y = x o (y.bar(x)) and \
                x ^ y = (bar(y) o x).y: o and . are commutative; x o bar(x)=1 and x.bar(x)=0; \
                x v y = bar(bar(y) ^ bar(x)); (X,v,^,0,1) is a distributive lattice; being a Boolean \
                algebra, x o y = x v y and x o x = x are equivalent; o distributes over ^ and . over v",
            PROP_6_4 => "If (A,p,0,1) is a ternary MV-algebra then (A,o,bar,0) with a o b=p(a,b,1) and \
                bar(a)=p(1,a,0) is an MV-algebra",
            PROP_6_5 => "If (A,o,bar,0) is an MV-algebra then p(a,b,c) = ((bar(a) o bar(b)).a) o (b.c) makes \
                (A,p,0,1) a ternary MV-algebra, with p(1,a,0)=bar(a), p(0,a,b)=a.b, p(b,bar(a),0)=a^b, \
                p(1,bar(b),a)=a v b and p(a,b,1)=a o b",
            THM_6_6 => "Ternary MV-algebras and MV-algebras correspond one to one: both round trips are exact; \
                moreover a^b=p(a,bar(b),b), b v a=p(a,bar(a),b), a+0=a=0+a and a+1=bar(a)=1+a",
        }
    }

    /// Axioms a ternary system must satisfy for the claim to apply. `None`
    /// for claims about classical structures only.
    pub fn hypotheses(self) -> Option<&'static [AxiomId]> {
        match self {
            LEMMA_2_2 | LEMMA_2_3 | LEMMA_2_4 | LEMMA_2_5 | LEMMA_2_6 | PROP_3_1 | THM_3_2 | THM_4_1 | THM_5_2
            | THM_5_3 => Some(&BASE_AXIOMS),
            THM_4_2 => Some(&DE_MORGAN_AXIOMS),
            PROP_6_4 | THM_6_6 => Some(&TERNARY_MV_AXIOMS),
            PROP_5_1 | PROP_6_2 | PROP_6_5 => None,
        }
    }

    pub fn is_equivalence(self) -> bool {
        TheoremId::EQUIVALENCES.contains(&self)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown theorem `{0}` (expected one of {})", TheoremId::ALL.map(|t| t.name()).join(", "))]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    /// Case-insensitive; `.` and `-` count as `_`.
    fn from_str(s: &str) -> Result<TheoremId, UnknownTheorem> {
        let norm: String = s
            .trim()
            .chars()
            .map(|c| if c == '.' || c == '-' { '_' } else { c.to_ascii_uppercase() })
            .collect();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == norm)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!("thm-3.2".parse::<TheoremId>().unwrap(), THM_3_2);
        assert!("THM_9_9".parse::<TheoremId>().is_err());
    }
}
