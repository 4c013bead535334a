//! Small classical structures used by tests, the verifier and the CLI.

use super::types::{BooleanAlgebra, DeMorganAlgebra, MVAlgebra, NearRing, Ring2};

fn square(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    (0..n * n).map(|i| f(i / n, i % n)).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Power set of a `k`-element set as bitmasks.
pub fn boolean_algebra(k: u32) -> BooleanAlgebra {
    let n = 1usize << k;
    let top = n - 1;
    let labels = (k == 1).then(|| vec!["0".to_string(), "1".to_string()]);
    let d = DeMorganAlgebra::new(
        n,
        square(n, |a, b| a & b),
        square(n, |a, b| a | b),
        (0..n).map(|a| top ^ a).collect(),
        0,
        top,
        labels,
    )
    .expect("power set tables");
    BooleanAlgebra::new(d).expect("power set is Boolean")
}

/// Divisors of `n` under gcd and lcm, with `bar(d) = n / d`.
pub fn divisor_lattice(n: usize) -> DeMorganAlgebra {
    assert!(n >= 2);
    let divs: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let idx = |x: usize| divs.iter().position(|&d| d == x).unwrap();
    let m = divs.len();
    DeMorganAlgebra::new(
        m,
        square(m, |a, b| idx(gcd(divs[a], divs[b]))),
        square(m, |a, b| idx(divs[a] / gcd(divs[a], divs[b]) * divs[b])),
        (0..m).map(|a| idx(n / divs[a])).collect(),
        0,
        m - 1,
        Some(divs.iter().map(|d| d.to_string()).collect()),
    )
    .expect("divisor tables")
}

/// The `n`-element chain with min, max and `x -> n-1-x`.
pub fn demorgan_chain(n: usize) -> DeMorganAlgebra {
    DeMorganAlgebra::new(
        n,
        square(n, |a, b| a.min(b)),
        square(n, |a, b| a.max(b)),
        (0..n).map(|a| n - 1 - a).collect(),
        0,
        n - 1,
        Some(fractions(n)),
    )
    .expect("chain tables")
}

/// Kleene's three-element chain.
pub fn kleene3() -> DeMorganAlgebra {
    demorgan_chain(3)
}

/// Four-element diamond `{0, u, v, 1}` with `u` and `v` fixed by the
/// involution.
pub fn diamond4() -> DeMorganAlgebra {
    // u = 1, v = 2 as bitmasks of a two-atom lattice
    let n = 4;
    DeMorganAlgebra::new(
        n,
        square(n, |a, b| a & b),
        square(n, |a, b| a | b),
        vec![3, 1, 2, 0],
        0,
        3,
        Some(["0", "u", "v", "1"].map(String::from).to_vec()),
    )
    .expect("diamond tables")
}

fn fractions(n: usize) -> Vec<String> {
    let d = n - 1;
    (0..n)
        .map(|k| match k {
            0 => "0".to_string(),
            k if k == d => "1".to_string(),
            k => {
                let g = gcd(k, d);
                format!("{}/{}", k / g, d / g)
            }
        })
        .collect()
}

/// Łukasiewicz chain with `n` elements: `x o y = min(x + y, 1)`, `bar x = 1 - x`.
pub fn lukasiewicz(n: usize) -> MVAlgebra {
    assert!(n >= 2);
    let top = n - 1;
    MVAlgebra::new(
        n,
        square(n, |a, b| (a + b).min(top)),
        (0..n).map(|a| top - a).collect(),
        0,
        Some(fractions(n)),
    )
    .expect("chain tables")
}

/// Direct product of two Łukasiewicz chains; `(i, j)` sits at `i * n + j`.
pub fn lukasiewicz_product(m: usize, n: usize) -> MVAlgebra {
    let size = m * n;
    let split = |x: usize| (x / n, x % n);
    let fm = fractions(m);
    let fnn = fractions(n);
    MVAlgebra::new(
        size,
        square(size, |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            (a + c).min(m - 1) * n + (b + d).min(n - 1)
        }),
        (0..size)
            .map(|x| {
                let (a, b) = split(x);
                (m - 1 - a) * n + (n - 1 - b)
            })
            .collect(),
        0,
        Some((0..size).map(|x| format!("({},{})", fm[x / n], fnn[x % n])).collect()),
    )
    .expect("product tables")
}

/// `Z2^k` as a Boolean ring: XOR and AND on bitmasks.
pub fn boolean_ring(k: u32) -> Ring2 {
    let n = 1usize << k;
    Ring2::new(n, square(n, |a, b| a ^ b), square(n, |a, b| a & b), 0, n - 1, None).expect("boolean ring tables")
}

/// The field with four elements, `Z2[x]/(x^2 + x + 1)`; bit 0 is the
/// constant term.
pub fn gf4() -> Ring2 {
    let mul = |a: usize, b: usize| {
        let mut r = 0usize;
        for i in 0..2 {
            if b >> i & 1 == 1 {
                r ^= a << i;
            }
        }
        if r & 4 != 0 {
            r ^= 0b111;
        }
        r
    };
    Ring2::new(
        4,
        square(4, |a, b| a ^ b),
        square(4, mul),
        0,
        1,
        Some(["0", "1", "x", "x+1"].map(String::from).to_vec()),
    )
    .expect("gf4 tables")
}

/// Dual numbers over Z2, `Z2[e]/(e^2)`.
pub fn dual_numbers() -> Ring2 {
    // a + b e at index a + 2b
    let mul = |x: usize, y: usize| {
        let (a, b, c, d) = (x & 1, x >> 1, y & 1, y >> 1);
        (a & c) | (((a & d) ^ (b & c)) << 1)
    };
    Ring2::new(
        4,
        square(4, |a, b| a ^ b),
        square(4, mul),
        0,
        1,
        Some(["0", "1", "e", "1+e"].map(String::from).to_vec()),
    )
    .expect("dual number tables")
}

/// Upper-triangular binary 2x2 matrices `[[a, b], [0, d]]` at index
/// `4a + 2b + d`.
pub fn upper_triangular_ring() -> Ring2 {
    let split = |x: usize| (x >> 2 & 1, x >> 1 & 1, x & 1);
    let mul = |x: usize, y: usize| {
        let (a, b, d) = split(x);
        let (a2, b2, d2) = split(y);
        (a & a2) << 2 | ((a & b2) ^ (b & d2)) << 1 | (d & d2)
    };
    let labels = (0..8)
        .map(|x| {
            let (a, b, d) = split(x);
            format!("[{a}{b};0{d}]")
        })
        .collect();
    Ring2::new(8, square(8, |a, b| a ^ b), square(8, mul), 0, 0b101, Some(labels)).expect("matrix ring tables")
}

/// The four-element right near-ring `{0, u, v, 1}` of characteristic 2;
/// addition is symmetric difference on the index bits.
pub fn nearring4() -> NearRing {
    const MUL: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 2, 2], [0, 1, 2, 3]];
    NearRing::new(
        4,
        square(4, |a, b| a ^ b),
        square(4, |a, b| MUL[a][b]),
        0,
        3,
        true,
        Some(["0", "u", "v", "1"].map(String::from).to_vec()),
    )
    .expect("near-ring tables")
}

/// Integers mod `n` as a (commutative) near-ring.
pub fn integers_mod(n: usize) -> NearRing {
    NearRing::new(n, square(n, |a, b| (a + b) % n), square(n, |a, b| a * b % n), 0, 1, n == 2, None)
        .expect("modular tables")
}

/// Named fixture lists covering every structure class.
#[derive(Clone, Debug)]
pub struct FixtureLibrary {
    pub boolean: Vec<(String, BooleanAlgebra)>,
    pub de_morgan: Vec<(String, DeMorganAlgebra)>,
    pub mv: Vec<(String, MVAlgebra)>,
    pub rings: Vec<(String, Ring2)>,
    pub near_rings: Vec<(String, NearRing)>,
}

impl FixtureLibrary {
    pub fn standard() -> FixtureLibrary {
        FixtureLibrary {
            boolean: (1..=3).map(|k| (format!("2^{k}"), boolean_algebra(k))).collect(),
            de_morgan: vec![
                ("div6".into(), divisor_lattice(6)),
                ("div12".into(), divisor_lattice(12)),
                ("div30".into(), divisor_lattice(30)),
                ("kleene3".into(), kleene3()),
                ("chain4".into(), demorgan_chain(4)),
                ("diamond4".into(), diamond4()),
            ],
            mv: (2..=5)
                .map(|n| (format!("L{n}"), lukasiewicz(n)))
                .chain([("L3xL2".to_string(), lukasiewicz_product(3, 2))])
                .collect(),
            rings: (1..=3)
                .map(|k| (format!("Z2^{k}"), boolean_ring(k)))
                .chain([
                    ("GF4".to_string(), gf4()),
                    ("Z2[e]".to_string(), dual_numbers()),
                    ("UT2(Z2)".to_string(), upper_triangular_ring()),
                ])
                .collect(),
            near_rings: vec![
                ("nearring4".into(), nearring4()),
                ("Z2".into(), integers_mod(2)),
                ("Z3".into(), integers_mod(3)),
                ("Z4".into(), integers_mod(4)),
            ],
        }
    }
}
