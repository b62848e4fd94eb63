//! Finite groups as Cayley tables, and the two quantum groups built on them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::{FiniteQuantumGroup, QuantumGroupParts};
use crate::scalar::Scalar;

pub const BUILTIN_GROUPS: [&str; 6] = ["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Cayley table file: `{order, table, labels}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTableFile {
    #[serde(default)]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

impl FiniteGroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(name: &str, table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidGroup(format!("{} labels for order {n}", labels.len())));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has length {}", row.len())));
            }
            if let Some(x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("entry {x} in row {i} out of range")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroupTable {
            name: name.to_string(),
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|a| a.to_string()).collect();
        let name = if n == 1 { "trivial".to_string() } else { format!("Z{n}") };
        Self::new(&name, table, labels).expect("cyclic groups are groups")
    }

    fn klein() -> Self {
        let table = (0..4).map(|a: usize| (0..4).map(|b| a ^ b).collect()).collect();
        let labels = ["(0,0)", "(1,0)", "(0,1)", "(1,1)"].map(String::from).to_vec();
        Self::new("Z2xZ2", table, labels).expect("Klein four-group")
    }

    fn symmetric3() -> Self {
        // permutations of {0,1,2} as images; composition (στ)(i) = σ(τ(i))
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let labels = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"].map(String::from).to_vec();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                    .collect()
            })
            .collect();
        Self::new("S3", table, labels).expect("S3")
    }

    /// `trivial`, `Z2xZ2`, `S3`, or `Zn` for a cyclic group of order `n ≥ 1`.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "trivial" => Ok(Self::cyclic(1)),
            "Z2xZ2" => Ok(Self::klein()),
            "S3" => Ok(Self::symmetric3()),
            other => match other.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if (1..=64).contains(&n) => Ok(Self::cyclic(n)),
                _ => Err(Error::InvalidGroup(format!("unknown builtin group {other:?}"))),
            },
        }
    }

    pub fn from_file(file: GroupTableFile) -> Result<Self> {
        if file.table.len() != file.order {
            return Err(Error::InvalidGroup(format!(
                "order {} but table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        let labels = file
            .labels
            .unwrap_or_else(|| (0..file.order).map(|i| i.to_string()).collect());
        Self::new(file.name.as_deref().unwrap_or("G"), file.table, labels)
    }

    pub fn to_file(&self) -> GroupTableFile {
        GroupTableFile {
            name: Some(self.name.clone()),
            order: self.order(),
            table: self.table.clone(),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// All subgroups, as sorted index lists, in order of the subset bitmask.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        assert!(n <= 20, "subgroup enumeration is exponential");
        (1u32..(1 << n))
            .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>())
            .filter(|s| self.is_subgroup(s))
            .collect()
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        s.contains(&self.identity)
            && s.iter()
                .all(|&a| s.contains(&self.inverse[a]) && s.iter().all(|&b| s.contains(&self.table[a][b])))
    }
}

fn indicator<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect()
}

/// Functions on `G`: basis `δ_g`, pointwise product,
/// `Δ(δ_g) = Σ_{hk=g} δ_h ⊗ δ_k`, `φ = ψ =` counting sum.
pub fn function_algebra<S: Scalar>(g: &FiniteGroupTable) -> FiniteQuantumGroup<S> {
    let n = g.order();
    let mult = (0..n).map(|i| (i, i, i, S::one())).collect();
    let mut comult = Vec::new();
    for h in 0..n {
        for k in 0..n {
            comult.push((g.mul(h, k), h, k, S::one()));
        }
    }
    let parts = QuantumGroupParts {
        id: format!("function-algebra:{}", g.name()),
        labels: g.labels().iter().map(|l| format!("delta_{l}")).collect(),
        mult,
        comult,
        counit: indicator(n, g.identity()),
        antipode: (0..n).map(|a| indicator(n, g.inverse(a))).collect(),
        star: Some((0..n).map(|a| indicator(n, a)).collect()),
        unit: vec![S::one(); n],
        left_integral: vec![S::one(); n],
        right_integral: vec![S::one(); n],
    };
    FiniteQuantumGroup::new(parts).expect("well-formed by construction")
}

/// The group algebra: basis `λ_g`, `λ_g λ_h = λ_{gh}`, `Δ(λ_g) = λ_g ⊗ λ_g`,
/// `λ_g* = λ_{g⁻¹}`, `φ(λ_g) = ψ(λ_g) = [g = e]`.
pub fn group_algebra<S: Scalar>(g: &FiniteGroupTable) -> FiniteQuantumGroup<S> {
    let n = g.order();
    let mut mult = Vec::new();
    for a in 0..n {
        for b in 0..n {
            mult.push((a, b, g.mul(a, b), S::one()));
        }
    }
    let inverse_rows: Vec<Vec<S>> = (0..n).map(|a| indicator(n, g.inverse(a))).collect();
    let e = indicator(n, g.identity());
    let parts = QuantumGroupParts {
        id: format!("group-algebra:{}", g.name()),
        labels: g.labels().iter().map(|l| format!("lambda_{l}")).collect(),
        mult,
        comult: (0..n).map(|a| (a, a, a, S::one())).collect(),
        counit: vec![S::one(); n],
        antipode: inverse_rows.clone(),
        star: Some(inverse_rows),
        unit: e.clone(),
        left_integral: e.clone(),
        right_integral: e,
    };
    FiniteQuantumGroup::new(parts).expect("well-formed by construction")
}
