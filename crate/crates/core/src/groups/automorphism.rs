use std::collections::{HashSet, VecDeque};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::groups::{closure, Family, GroupTable, Limits};
use crate::numtheory::units_mod;

/// A group automorphism stored as its image map on element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    image: Vec<usize>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism {
            image: (0..order).collect(),
        }
    }

    /// Checks bijectivity and the homomorphism law over all pairs.
    pub fn new(group: &GroupTable, image: Vec<usize>) -> Result<Self> {
        let a = Automorphism { image };
        a.check(group)?;
        Ok(a)
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        Automorphism { image }
    }

    pub fn check(&self, group: &GroupTable) -> Result<()> {
        let n = group.order();
        if self.image.len() != n {
            return Err(Error::InvalidArgument(format!(
                "image map has length {}, group order is {n}",
                self.image.len()
            )));
        }
        let mut hit = vec![false; n];
        for &y in &self.image {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return Err(Error::InvalidArgument("image map is not a bijection".into()));
            }
        }
        if self.image[group.identity()] != group.identity() {
            return Err(Error::InvalidArgument("identity is not fixed".into()));
        }
        for g in 0..n {
            for h in 0..n {
                if self.image[group.mul(g, h)] != group.mul(self.image[g], self.image[h]) {
                    return Err(Error::InvalidArgument(format!("homomorphism law fails at ({g}, {h})")));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.image[g]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` after `first`: `x ↦ self(first(x))`.
    pub fn after(&self, first: &Automorphism) -> Automorphism {
        Automorphism {
            image: first.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn apply_set(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(set.capacity(), set.iter().map(|g| self.image[g]))
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = self.after(&cur);
            k += 1;
        }
        k
    }
}

/// All automorphisms of `group`, identity first.
///
/// Cyclic groups use the units of `Z_n`; dihedral groups `D_n` with `n >= 3`
/// use the maps `a ↦ a^i, b ↦ b a^j`. Every other group goes through the
/// generic backtracking search.
pub fn automorphisms(group: &GroupTable) -> Result<Vec<Automorphism>> {
    automorphisms_with_limits(group, &Limits::default())
}

pub fn automorphisms_with_limits(group: &GroupTable, limits: &Limits) -> Result<Vec<Automorphism>> {
    match group.family() {
        Family::Cyclic(n) => Ok(cyclic_automorphisms(n)),
        Family::Dihedral(n) if n >= 3 => Ok(dihedral_automorphisms(n)),
        _ => automorphisms_generic(group, limits),
    }
}

/// `x ↦ u x` for every unit `u` of `Z_n`, in ascending order of `u`.
pub fn cyclic_automorphisms(n: usize) -> Vec<Automorphism> {
    units_mod(n as u64)
        .into_iter()
        .map(|u| {
            let u = u as usize;
            Automorphism::from_image_unchecked((0..n).map(|x| u * x % n).collect())
        })
        .collect()
}

/// The `n φ(n)` maps `a ↦ a^i, b ↦ b a^j` of `D_n`, ordered by `(i, j)`.
pub fn dihedral_automorphisms(n: usize) -> Vec<Automorphism> {
    let mut out = Vec::new();
    for i in units_mod(n as u64) {
        let i = i as usize;
        for j in 0..n {
            let mut image = vec![0; 2 * n];
            for k in 0..n {
                image[k] = i * k % n;
                image[n + k] = n + (j + i * k) % n;
            }
            out.push(Automorphism::from_image_unchecked(image));
        }
    }
    out
}

/// Backtracking over images of a greedily chosen generating sequence.
///
/// Candidate images must have the generator's element order, and each
/// prefix of images must generate a subgroup of the same size as the
/// matching prefix of generators. Every complete assignment is expanded
/// along a spanning tree of words and then checked over all pairs.
pub fn automorphisms_generic(group: &GroupTable, limits: &Limits) -> Result<Vec<Automorphism>> {
    let n = group.order();
    if n > limits.max_order {
        return Err(Error::ResourceLimit {
            what: "group order for automorphism search".into(),
            limit: limits.max_order as u64,
            actual: n as u64,
        });
    }
    let gens = greedy_generators(group);
    let prefix_sizes: Vec<usize> = (1..=gens.len()).map(|i| closure(group, &gens[..i]).len()).collect();
    let orders: Vec<usize> = (0..n).map(|g| group.element_order(g)).collect();

    // spanning tree: element -> (parent, generator slot) with x = parent * gen
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut bfs = vec![group.identity()];
    let mut seen = vec![false; n];
    seen[group.identity()] = true;
    let mut q = VecDeque::from([group.identity()]);
    while let Some(x) = q.pop_front() {
        for (slot, &g) in gens.iter().enumerate() {
            let y = group.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, slot));
                bfs.push(y);
                q.push_back(y);
            }
        }
    }

    let mut found = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(
        group,
        &gens,
        &prefix_sizes,
        &orders,
        &bfs,
        &parent,
        &mut images,
        &mut found,
        limits,
    )?;
    if let Some(pos) = found.iter().position(Automorphism::is_identity) {
        let id = found.remove(pos);
        found.insert(0, id);
    }
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn search(
    group: &GroupTable,
    gens: &[usize],
    prefix_sizes: &[usize],
    orders: &[usize],
    bfs: &[usize],
    parent: &[Option<(usize, usize)>],
    images: &mut Vec<usize>,
    found: &mut Vec<Automorphism>,
    limits: &Limits,
) -> Result<()> {
    let depth = images.len();
    if depth == gens.len() {
        let n = group.order();
        let mut map = vec![usize::MAX; n];
        map[group.identity()] = group.identity();
        for &x in &bfs[1..] {
            let (p, slot) = parent[x].expect("non-root has a parent");
            map[x] = group.mul(map[p], images[slot]);
        }
        let candidate = Automorphism::from_image_unchecked(map);
        if candidate.check(group).is_ok() {
            if found.len() >= limits.max_automorphisms {
                return Err(Error::ResourceLimit {
                    what: "automorphism count".into(),
                    limit: limits.max_automorphisms as u64,
                    actual: found.len() as u64 + 1,
                });
            }
            found.push(candidate);
        }
        return Ok(());
    }
    let want = orders[gens[depth]];
    for y in group.elements() {
        if orders[y] != want {
            continue;
        }
        images.push(y);
        if closure(group, images).len() == prefix_sizes[depth] {
            search(group, gens, prefix_sizes, orders, bfs, parent, images, found, limits)?;
        }
        images.pop();
    }
    Ok(())
}

/// Elements by decreasing order, each kept only if it enlarges the subgroup
/// generated so far.
fn greedy_generators(group: &GroupTable) -> Vec<usize> {
    let mut candidates: Vec<usize> = group.elements().collect();
    candidates.sort_by_key(|&g| (std::cmp::Reverse(group.element_order(g)), g));
    let mut gens = Vec::new();
    let mut span = closure(group, &gens);
    for g in candidates {
        if span.len() == group.order() {
            break;
        }
        if !span.contains(g) {
            gens.push(g);
            span = closure(group, &gens);
        }
    }
    gens
}

/// Conjugation maps `x ↦ g^-1 x g`, deduplicated by image; identity first.
pub fn inner_automorphisms(group: &GroupTable) -> Vec<Automorphism> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in group.elements() {
        let image: Vec<usize> = group.elements().map(|x| group.conjugate(x, g)).collect();
        if seen.insert(image.clone()) {
            out.push(Automorphism::from_image_unchecked(image));
        }
    }
    if let Some(pos) = out.iter().position(Automorphism::is_identity) {
        let id = out.remove(pos);
        out.insert(0, id);
    }
    out
}
