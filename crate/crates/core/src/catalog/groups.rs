use std::collections::HashMap;
use std::hash::Hash;

use crate::algebra::Algebra;
use crate::arith::Field;
use crate::error::{Error, Result};

/// A finite group by its multiplication table, `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let g = Self { names, table };
        g.verify()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// Closure of `generators` under `mul`, identity first, then in discovery order.
    pub fn generate<T: Clone + Eq + Hash>(
        identity: T,
        generators: &[T],
        mul: impl Fn(&T, &T) -> T,
        name: impl Fn(&T) -> String,
    ) -> Self {
        let mut elems = vec![identity];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut i = 0;
        while i < elems.len() {
            for g in generators {
                let h = mul(&elems[i], g);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elems.len());
                    elems.push(h);
                }
            }
            i += 1;
        }
        let table = elems.iter().map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect()).collect();
        Self { names: elems.iter().map(name).collect(), table }
    }

    pub fn identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|a| self.table[e][a] == a && self.table[a][e] == a))
    }

    /// Checks closure, associativity, identity and inverses.
    pub fn verify(&self) -> Result<()> {
        let n = self.order();
        if n == 0 || self.table.len() != n || self.table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Input("group table is not a square table on its elements".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return Err(Error::Input(format!(
                            "group table is not associative at ({}, {}, {})",
                            self.names[a], self.names[b], self.names[c]
                        )));
                    }
                }
            }
        }
        let e = self.identity().ok_or_else(|| Error::Input("group table has no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| self.table[a][b] == e && self.table[b][a] == e) {
                return Err(Error::Input(format!("{} has no inverse", self.names[a])));
            }
        }
        Ok(())
    }

    pub fn inverse(&self, a: usize) -> usize {
        let e = self.identity().expect("verified group");
        (0..self.order()).find(|&b| self.table[a][b] == e).expect("verified group")
    }

    pub fn direct_product(&self, other: &Self) -> Self {
        let m = other.order();
        let n = self.order() * m;
        let names = (0..n).map(|t| format!("({},{})", self.names[t / m], other.names[t % m])).collect();
        let table = (0..n)
            .map(|s| (0..n).map(|t| self.table[s / m][t / m] * m + other.table[s % m][t % m]).collect())
            .collect();
        Self { names, table }
    }
}

pub fn cyclic_group_table(n: usize) -> GroupTable {
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    GroupTable { names, table }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a b)(i) = a(b(i))
    b.iter().map(|&i| a[i]).collect()
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Group generated by permutations of `0..degree`, elements named in cycle notation.
pub fn permutation_group_table(degree: usize, generators: &[Vec<usize>]) -> GroupTable {
    let id: Vec<usize> = (0..degree).collect();
    GroupTable::generate(id, generators, |a, b| compose(a, b), |p| cycle_name(p))
}

/// `S_3` with elements `(), (12), (13), (23), (123), (132)` in that order.
pub fn symmetric_group_s3_table() -> GroupTable {
    let elems: Vec<Vec<usize>> =
        vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 1, 0], vec![0, 2, 1], vec![1, 2, 0], vec![2, 0, 1]];
    let index = |p: &Vec<usize>| elems.iter().position(|q| q == p).unwrap();
    let table = elems.iter().map(|a| elems.iter().map(|b| index(&compose(a, b))).collect()).collect();
    GroupTable { names: elems.iter().map(|p| cycle_name(p)).collect(), table }
}

pub fn dihedral_group_table(n: usize) -> GroupTable {
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    permutation_group_table(n, &[rot, refl])
}

/// `Q_8` realised by 2×2 matrices over the Gaussian integers.
pub fn quaternion_group_table() -> GroupTable {
    type G = [(i64, i64); 4];
    fn mul(a: &G, b: &G) -> G {
        let m = |x: (i64, i64), y: (i64, i64)| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        let add = |x: (i64, i64), y: (i64, i64)| (x.0 + y.0, x.1 + y.1);
        [
            add(m(a[0], b[0]), m(a[1], b[2])),
            add(m(a[0], b[1]), m(a[1], b[3])),
            add(m(a[2], b[0]), m(a[3], b[2])),
            add(m(a[2], b[1]), m(a[3], b[3])),
        ]
    }
    let one: G = [(1, 0), (0, 0), (0, 0), (1, 0)];
    let i: G = [(0, 1), (0, 0), (0, 0), (0, -1)];
    let j: G = [(0, 0), (1, 0), (-1, 0), (0, 0)];
    let k = mul(&i, &j);
    let neg = |a: &G| a.map(|(x, y)| (-x, -y));
    let named = [
        (one, "1"),
        (i, "i"),
        (j, "j"),
        (k, "k"),
        (neg(&one), "-1"),
        (neg(&i), "-i"),
        (neg(&j), "-j"),
        (neg(&k), "-k"),
    ];
    GroupTable::generate(one, &[i, j], mul, |g| {
        named.iter().find(|(m, _)| m == g).map(|(_, n)| n.to_string()).unwrap_or_default()
    })
}

/// `K[G]` in the basis of group elements.
pub fn group_algebra<F: Field>(field: F, group: &GroupTable) -> Result<Algebra<F>> {
    group.verify()?;
    let e = group.identity().expect("verified group");
    let n = group.order();
    let mut unit = vec![field.zero(); n];
    unit[e] = field.one();
    let one = field.one();
    Algebra::from_fn(field, group.names.clone(), unit, |a, b| vec![(group.table[a][b], one.clone())])
}
