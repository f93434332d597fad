//! Coxeter matrices and the presentation documents they are read from.

use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};

/// A generator of the Coxeter system, by position in the generator order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub u8);

impl Gen {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Label of the edge between two distinct generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    pub fn finite(self) -> Option<u32> {
        match self {
            Bond::Finite(m) => Some(m),
            Bond::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Bond::Finite(_))
    }
}

impl std::str::FromStr for Bond {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Bond::Infinite),
            _ => s.parse::<u32>().map(Bond::Finite).map_err(|_| Error::Parse(format!("bad bond label `{s}`"))),
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => f.write_str("inf"),
        }
    }
}

/// A validated Coxeter matrix together with its generator names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    names: Vec<String>,
    // Row-major; diagonal stored as Finite(1).
    entries: Vec<Bond>,
}

impl CoxeterMatrix {
    /// Builds a matrix from named generators and a full square table of labels.
    pub fn new(names: Vec<String>, table: Vec<Vec<Bond>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("no generators".into()));
        }
        if n > 64 {
            return Err(Error::InvalidMatrix(format!("rank {n} exceeds 64")));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix(format!("matrix is not {n}x{n}")));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains(|c: char| c.is_whitespace() || c == ',' || c == '|') {
                return Err(Error::InvalidMatrix(format!("bad generator name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidMatrix(format!("duplicate generator `{name}`")));
            }
        }
        for i in 0..n {
            if table[i][i] != Bond::Finite(1) {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry ({}, {}) is {}, expected 1",
                    names[i], names[i], table[i][i]
                )));
            }
            for j in 0..n {
                if table[i][j] != table[j][i] {
                    return Err(Error::InvalidMatrix(format!("asymmetric entries at ({}, {})", names[i], names[j])));
                }
                if i != j {
                    if let Bond::Finite(m) = table[i][j] {
                        if m < 2 {
                            return Err(Error::InvalidMatrix(format!(
                                "off-diagonal entry ({}, {}) is {m}, expected >= 2",
                                names[i], names[j]
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self { names, entries: table.into_iter().flatten().collect() })
    }

    /// Builds a matrix on generators `1..=n`, all pairs commuting unless listed.
    pub fn from_bonds(rank: usize, bonds: &[(usize, usize, Bond)]) -> Result<Self> {
        let mut table = vec![vec![Bond::Finite(2); rank]; rank];
        for (i, row) in table.iter_mut().enumerate() {
            row[i] = Bond::Finite(1);
        }
        for &(a, b, bond) in bonds {
            if a == 0 || b == 0 || a > rank || b > rank || a == b {
                return Err(Error::InvalidMatrix(format!("bad edge ({a}, {b})")));
            }
            table[a - 1][b - 1] = bond;
            table[b - 1][a - 1] = bond;
        }
        Self::new(numbered(rank), table)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: Gen) -> &str {
        &self.names[s.index()]
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + Clone {
        (0..self.rank() as u8).map(Gen)
    }

    pub fn generator(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Gen(i as u8))
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn bond(&self, s: Gen, t: Gen) -> Bond {
        self.entries[s.index() * self.rank() + t.index()]
    }

    /// Finite off-diagonal labels, each once.
    pub fn finite_labels(&self) -> Vec<u32> {
        let mut labels: Vec<u32> = self.pairs().filter_map(|(s, t)| self.bond(s, t).finite()).collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }

    /// Unordered pairs of distinct generators.
    pub fn pairs(&self) -> impl Iterator<Item = (Gen, Gen)> + '_ {
        self.generators().flat_map(move |s| self.generators().filter(move |t| s < *t).map(move |t| (s, t)))
    }

    /// All off-diagonal labels are at least 3.
    pub fn is_large_type(&self) -> bool {
        self.pairs().all(|(s, t)| match self.bond(s, t) {
            Bond::Finite(m) => m >= 3,
            Bond::Infinite => true,
        })
    }

    /// All off-diagonal labels are 2 or infinity.
    pub fn is_right_angled(&self) -> bool {
        self.pairs().all(|(s, t)| matches!(self.bond(s, t), Bond::Finite(2) | Bond::Infinite))
    }

    /// The same system with generators listed in `order`.
    pub fn reordered(&self, order: &[String]) -> Result<Self> {
        if order.len() != self.rank() {
            return Err(Error::InvalidMatrix(format!(
                "order lists {} generators, system has {}",
                order.len(),
                self.rank()
            )));
        }
        let perm: Vec<Gen> = order.iter().map(|n| self.generator(n)).collect::<Result<_>>()?;
        let table = perm.iter().map(|&s| perm.iter().map(|&t| self.bond(s, t)).collect()).collect();
        Self::new(order.to_vec(), table)
    }

    /// Parses a presentation document: either a catalog descriptor or an
    /// explicit matrix. Both are JSON objects.
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = value.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        if let Some(ty) = obj.get("type") {
            let ty = ty.as_str().ok_or_else(|| Error::Parse("`type` must be a string".into()))?;
            let rank = optional_uint(obj.get("rank"), "rank")?;
            let bond = obj.get("bond").map(parse_bond).transpose()?;
            let commuting = match obj.get("commuting") {
                None => Vec::new(),
                Some(v) => parse_pairs(v)?,
            };
            let spec = CatalogSpec { ty: ty.to_string(), rank, bond, commuting };
            return catalog(&spec);
        }
        let rows = obj
            .get("matrix")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("expected `type` or `matrix`".into()))?;
        let table: Vec<Vec<Bond>> = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("matrix rows must be arrays".into()))?
                    .iter()
                    .map(parse_bond)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let names = match obj.get("generators") {
            None => numbered(table.len()),
            Some(v) => v
                .as_array()
                .ok_or_else(|| Error::Parse("`generators` must be an array".into()))?
                .iter()
                .map(|g| match g {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    _ => Err(Error::Parse("generator names must be strings".into())),
                })
                .collect::<Result<_>>()?,
        };
        Self::new(names, table)
    }

    /// Serializes back into the explicit-matrix document form.
    pub fn to_document(&self) -> Value {
        let rows: Vec<Value> = self
            .generators()
            .map(|s| {
                Value::Array(
                    self.generators()
                        .map(|t| match self.bond(s, t) {
                            Bond::Finite(m) => Value::from(m),
                            Bond::Infinite => Value::from("inf"),
                        })
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({ "generators": self.names, "matrix": rows })
    }
}

/// A catalog descriptor, as found in a document or on the command line.
#[derive(Debug, Clone, Default)]
pub struct CatalogSpec {
    pub ty: String,
    pub rank: Option<usize>,
    pub bond: Option<Bond>,
    /// Commuting pairs (1-based) for right-angled systems.
    pub commuting: Vec<(usize, usize)>,
}

/// Resolves a catalog descriptor.
///
/// Affine types take the affine rank `n` and produce `n + 1` generators.
/// `rightAngled` takes the rank and the commuting pairs; every other pair
/// gets an infinite bond.
pub fn catalog(spec: &CatalogSpec) -> Result<CoxeterMatrix> {
    let need_rank = |min: usize| -> Result<usize> {
        let n = spec.rank.ok_or_else(|| Error::Parse(format!("type `{}` needs a rank", spec.ty)))?;
        if n < min {
            return Err(Error::InvalidMatrix(format!("type `{}` needs rank >= {min}, got {n}", spec.ty)));
        }
        Ok(n)
    };
    let three = Bond::Finite(3);
    let four = Bond::Finite(4);
    let path = |n: usize| -> Vec<(usize, usize, Bond)> { (1..n).map(|i| (i, i + 1, three)).collect() };
    match spec.ty.as_str() {
        "A" => CoxeterMatrix::from_bonds(need_rank(1)?, &path(need_rank(1)?)),
        "B" | "C" => {
            let n = need_rank(2)?;
            let mut bonds = path(n);
            bonds[n - 2].2 = four;
            CoxeterMatrix::from_bonds(n, &bonds)
        }
        "D" => {
            let n = need_rank(4)?;
            let mut bonds = path(n - 1);
            bonds.push((n - 2, n, three));
            CoxeterMatrix::from_bonds(n, &bonds)
        }
        "H" => {
            let n = need_rank(3)?;
            if n > 4 {
                return Err(Error::InvalidMatrix(format!("type H has rank 3 or 4, got {n}")));
            }
            let mut bonds = path(n);
            bonds[0].2 = Bond::Finite(5);
            CoxeterMatrix::from_bonds(n, &bonds)
        }
        "I2" => {
            let m = spec.bond.ok_or_else(|| Error::Parse("type `I2` needs a bond".into()))?;
            CoxeterMatrix::from_bonds(2, &[(1, 2, m)])
        }
        "affineA" => {
            let n = need_rank(1)?;
            if n == 1 {
                return CoxeterMatrix::from_bonds(2, &[(1, 2, Bond::Infinite)]);
            }
            let mut bonds = path(n + 1);
            bonds.push((n + 1, 1, three));
            CoxeterMatrix::from_bonds(n + 1, &bonds)
        }
        "affineB" => {
            let n = need_rank(3)?;
            // Two leaves 1 and 2 hang off node 3; the chain 3..n+1 ends in a 4.
            let mut bonds = vec![(1, 3, three), (2, 3, three)];
            bonds.extend((3..=n).map(|i| (i, i + 1, three)));
            bonds.last_mut().expect("n >= 3").2 = four;
            CoxeterMatrix::from_bonds(n + 1, &bonds)
        }
        "affineC" => {
            let n = need_rank(2)?;
            let mut bonds = path(n + 1);
            bonds[0].2 = four;
            bonds[n - 1].2 = four;
            CoxeterMatrix::from_bonds(n + 1, &bonds)
        }
        "rightAngled" => {
            let n = need_rank(1)?;
            let mut bonds = Vec::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    let commute = spec.commuting.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
                    if !commute {
                        bonds.push((a, b, Bond::Infinite));
                    }
                }
            }
            for &(x, y) in &spec.commuting {
                if x == 0 || y == 0 || x > n || y > n || x == y {
                    return Err(Error::InvalidMatrix(format!("bad commuting pair ({x}, {y})")));
                }
            }
            CoxeterMatrix::from_bonds(n, &bonds)
        }
        other => Err(Error::UnknownType(other.to_string())),
    }
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn optional_uint(v: Option<&Value>, key: &str) -> Result<Option<usize>> {
    match v {
        None => Ok(None),
        Some(v) => v
            .as_u64()
            .map(|n| Some(n as usize))
            .ok_or_else(|| Error::Parse(format!("`{key}` must be a non-negative integer"))),
    }
}

fn parse_bond(v: &Value) -> Result<Bond> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .and_then(|m| u32::try_from(m).ok())
            .map(Bond::Finite)
            .ok_or_else(|| Error::Parse(format!("bad bond label {n}"))),
        Value::String(s) => s.parse(),
        _ => Err(Error::Parse(format!("bad bond label {v}"))),
    }
}

fn parse_pairs(v: &Value) -> Result<Vec<(usize, usize)>> {
    let bad = || Error::Parse("`commuting` must be a list of [a, b] pairs".into());
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|p| {
            let p = p.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
            let a = p[0].as_u64().ok_or_else(bad)? as usize;
            let b = p[1].as_u64().ok_or_else(bad)? as usize;
            Ok((a, b))
        })
        .collect()
}
