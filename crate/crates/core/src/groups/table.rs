use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::groups::Automorphism;

/// Which constructor produced a table. The automorphism search uses this to
/// take the closed-form fast paths for cyclic and dihedral groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `Z_n` with element `i` the residue `i`.
    Cyclic(usize),
    /// `D_n` of order `2n`: index `i < n` is the rotation `a^i`, index
    /// `n + i` is the reflection `b a^i`.
    Dihedral(usize),
    Other,
}

/// A finite group as a dense multiplication table over indices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    label: String,
    family: Family,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl GroupTable {
    /// Builds a table whose group axioms hold by construction.
    fn assemble(order: usize, mul: Vec<usize>, identity: usize, label: String, family: Family) -> Self {
        let mut inverse = vec![usize::MAX; order];
        for g in 0..order {
            for h in 0..order {
                if mul[g * order + h] == identity {
                    inverse[g] = h;
                    break;
                }
            }
        }
        GroupTable {
            order,
            mul,
            identity,
            inverse,
            label,
            family,
        }
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("cyclic group order must be at least 1".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push((a + b) % n);
            }
        }
        Ok(GroupTable::assemble(n, mul, 0, format!("Z{n}"), Family::Cyclic(n)))
    }

    /// The dihedral group of order `2n`, presented as
    /// `<a, b | a^n = b^2 = 1, bab = a^-1>`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("dihedral parameter must be at least 1".into()));
        }
        let order = 2 * n;
        let mut mul = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let (xr, xi) = (x >= n, x % n);
                let (yr, yi) = (y >= n, y % n);
                // a^i a^j = a^(i+j); a^i b a^j = b a^(j-i);
                // b a^i a^j = b a^(i+j); b a^i b a^j = a^(j-i).
                let z = match (xr, yr) {
                    (false, false) => (xi + yi) % n,
                    (false, true) => n + (yi + n - xi) % n,
                    (true, false) => n + (xi + yi) % n,
                    (true, true) => (yi + n - xi) % n,
                };
                mul[x * order + y] = z;
            }
        }
        Ok(GroupTable::assemble(
            order,
            mul,
            0,
            format!("D{n}"),
            Family::Dihedral(n),
        ))
    }

    /// `G × H` with `(g, h)` stored at index `g * |H| + h`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Self {
        let (ng, nh) = (g.order, h.order);
        let order = ng * nh;
        let mut mul = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let a = g.mul(x / nh, y / nh);
                let b = h.mul(x % nh, y % nh);
                mul[x * order + y] = a * nh + b;
            }
        }
        let identity = g.identity * nh + h.identity;
        GroupTable::assemble(order, mul, identity, format!("{}x{}", g.label, h.label), Family::Other)
    }

    /// Validates a raw multiplication table: closure, identity, inverses and
    /// associativity, in that order. Diagnostics name the offending indices.
    pub fn from_table(raw: Vec<Vec<usize>>, label: impl Into<String>) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(Error::InvalidTable("table is empty".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidTable(format!(
                        "entry {i}*{j} = {v} is out of range 0..{n}"
                    )));
                }
                mul.push(v);
            }
        }
        validate(n, &mul)?;
        let identity = find_identity(n, &mul).expect("validated");
        Ok(GroupTable::assemble(n, mul, identity, label.into(), Family::Other))
    }

    /// Parses the plain-text table format: the order on the first line, then
    /// one row of space-separated indices per element.
    pub fn parse_table_text(text: &str, label: impl Into<String>) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing order line".into()))?
            .parse()
            .map_err(|_| Error::Parse("first line must be the group order".into()))?;
        let mut rows = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("row {i}: bad entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse(format!("expected {n} rows, found {}", rows.len())));
        }
        GroupTable::from_table(rows, label)
    }

    /// Serializes to the plain-text table format.
    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for g in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|h| self.mul(g, h).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// `<a, b | a^m = 1, b^k = a^t, b a b^-1 = a^r>` with `a^i b^j` stored at
    /// index `j * m + i`. The parameters are checked through the full group
    /// axioms.
    pub fn metacyclic(m: usize, k: usize, r: usize, t: usize, label: impl Into<String>) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(Error::InvalidArgument("metacyclic parameters must be positive".into()));
        }
        let order = m * k;
        let mut rpow = vec![1 % m; k];
        for j in 1..k {
            rpow[j] = rpow[j - 1] * r % m;
        }
        let mut mul = vec![0; order * order];
        for x in 0..order {
            let (i, j) = (x % m, x / m);
            for y in 0..order {
                let (i2, j2) = (y % m, y / m);
                let mut a = (i + i2 * rpow[j]) % m;
                let mut b = j + j2;
                if b >= k {
                    b -= k;
                    a = (a + t) % m;
                }
                mul[x * order + y] = b * m + a;
            }
        }
        validate(order, &mul)?;
        Ok(GroupTable::assemble(order, mul, 0, label.into(), Family::Other))
    }

    /// `N ⋊ Z_k` where the generator of `Z_k` acts on `N` through `phi`;
    /// `(x, j)` is stored at index `j * |N| + x`.
    pub fn semidirect_cyclic(n: &GroupTable, phi: &Automorphism, k: usize, label: impl Into<String>) -> Result<Self> {
        if k == 0 || phi.len() != n.order {
            return Err(Error::InvalidArgument(
                "semidirect product needs k >= 1 and an automorphism of N".into(),
            ));
        }
        let no = n.order;
        let mut powers: Vec<Vec<usize>> = vec![(0..no).collect()];
        for j in 1..=k {
            let prev = &powers[j - 1];
            powers.push((0..no).map(|x| phi.apply(prev[x])).collect());
        }
        if powers[k] != powers[0] {
            return Err(Error::InvalidArgument(format!(
                "automorphism order does not divide {k}"
            )));
        }
        let order = no * k;
        let mut mul = vec![0; order * order];
        for x in 0..order {
            let (a, j) = (x % no, x / no);
            for y in 0..order {
                let (b, j2) = (y % no, y / no);
                let c = n.mul(a, powers[j][b]);
                mul[x * order + y] = ((j + j2) % k) * no + c;
            }
        }
        validate(order, &mul)?;
        let identity = n.identity;
        Ok(GroupTable::assemble(order, mul, identity, label.into(), Family::Other))
    }

    /// Closes `generators` under `op`. Element 0 of the result is `identity`;
    /// the rest are numbered in discovery order.
    pub fn from_generators<T, F>(
        identity: T,
        generators: &[T],
        op: F,
        max_order: usize,
        label: impl Into<String>,
    ) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut cursor = 0;
        while cursor < elements.len() {
            let x = elements[cursor].clone();
            for g in generators {
                let y = op(&x, g);
                if !index.contains_key(&y) {
                    if elements.len() >= max_order {
                        return Err(Error::ResourceLimit {
                            what: "generated group order".into(),
                            limit: max_order as u64,
                            actual: elements.len() as u64 + 1,
                        });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            cursor += 1;
        }
        let n = elements.len();
        let mut mul = vec![0; n * n];
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                mul[i * n + j] = *index
                    .get(&op(x, y))
                    .ok_or_else(|| Error::InvalidTable("generated set is not closed".into()))?;
            }
        }
        validate(n, &mul)?;
        Ok(GroupTable::assemble(n, mul, 0, label.into(), Family::Other))
    }

    /// The group generated by permutations of `0..degree` (composition
    /// applies the left factor first).
    pub fn permutation_group(generators: &[Vec<usize>], label: impl Into<String>) -> Result<Self> {
        let degree = generators.first().map_or(0, Vec::len);
        let identity: Vec<usize> = (0..degree).collect();
        GroupTable::from_generators(
            identity,
            generators,
            |p, q| p.iter().map(|&i| q[i]).collect(),
            crate::groups::DEFAULT_MAX_ORDER,
            label,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn non_identity(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&g| g != self.identity)
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_involution(&self, g: usize) -> bool {
        g != self.identity && self.inverse[g] == g
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse[g], x), g)
    }
}

fn find_identity(n: usize, mul: &[usize]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| mul[e * n + x] == x && mul[x * n + e] == x))
}

fn validate(n: usize, mul: &[usize]) -> Result<()> {
    let e = find_identity(n, mul).ok_or_else(|| Error::InvalidTable("no two-sided identity element".into()))?;
    for g in 0..n {
        let right = (0..n).find(|&h| mul[g * n + h] == e);
        match right {
            Some(h) if mul[h * n + g] == e => {}
            _ => return Err(Error::InvalidTable(format!("element {g} has no two-sided inverse"))),
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = mul[a * n + b];
            for c in 0..n {
                if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                    return Err(Error::InvalidTable(format!("associativity fails for ({a}, {b}, {c})")));
                }
            }
        }
    }
    Ok(())
}
