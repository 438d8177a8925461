//! Finite G-sets stored as full action tables, and the `G`-module structure
//! of `C^X`.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::function::{FunctionOnG, FunctionOnX};
use crate::group::FiniteAbelianGroup;

/// A finite set of `n` points with an action of a finite abelian group.
///
/// `table[α·n + x]` is the image `αx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    group: FiniteAbelianGroup,
    points: usize,
    table: Vec<usize>,
}

fn is_permutation(row: &[usize], points: usize) -> bool {
    if row.len() != points {
        return false;
    }
    let mut seen = vec![false; points];
    for &y in row {
        if y >= points || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    true
}

impl GSet {
    /// Expands one permutation per canonical generator `e_j` into the full table.
    ///
    /// `generators[j][x]` is the image of point `x` under `e_j`.
    pub fn from_generators(
        group: FiniteAbelianGroup,
        points: usize,
        generators: &[Vec<usize>],
    ) -> Result<Self> {
        if generators.len() != group.rank() {
            return Err(Error::GeneratorCount {
                expected: group.rank(),
                got: generators.len(),
            });
        }
        for (j, perm) in generators.iter().enumerate() {
            if !is_permutation(perm, points) {
                return Err(Error::NotAPermutation {
                    row: group.generator(j),
                    points,
                });
            }
        }
        for (j, perm) in generators.iter().enumerate() {
            let order = group.invariants()[j];
            let identity = (0..points).all(|x| {
                let mut y = x;
                for _ in 0..order {
                    y = perm[y];
                }
                y == x
            });
            if !identity {
                return Err(Error::GeneratorOrder {
                    generator: j + 1,
                    order,
                });
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                let (a, b) = (&generators[i], &generators[j]);
                if (0..points).any(|x| a[b[x]] != b[a[x]]) {
                    return Err(Error::GeneratorsDoNotCommute {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }

        let m = group.order();
        let mut table = vec![0; m * points];
        for alpha in group.elements() {
            let residues = group.residues(alpha);
            for x in 0..points {
                let mut y = x;
                for (perm, &r) in generators.iter().zip(&residues) {
                    for _ in 0..r {
                        y = perm[y];
                    }
                }
                table[alpha * points + x] = y;
            }
        }
        Self::from_table(group, points, table)
    }

    /// Accepts a full action table (`m` rows of `n` images, canonical element
    /// order) after checking the action axioms.
    pub fn from_table(group: FiniteAbelianGroup, points: usize, table: Vec<usize>) -> Result<Self> {
        let m = group.order();
        if table.len() != m * points {
            return Err(Error::LengthMismatch {
                expected: m * points,
                got: table.len(),
            });
        }
        for alpha in 0..m {
            if !is_permutation(&table[alpha * points..(alpha + 1) * points], points) {
                return Err(Error::NotAPermutation { row: alpha, points });
            }
        }
        if let Some(point) = (0..points).find(|&x| table[x] != x) {
            return Err(Error::IdentityNotTrivial { point });
        }
        for a in 0..m {
            for b in 0..m {
                let ab = group.op(a, b);
                for x in 0..points {
                    let bx = table[b * points + x];
                    if table[ab * points + x] != table[a * points + bx] {
                        return Err(Error::IncompatibleAction { a, b, x });
                    }
                }
            }
        }
        Ok(GSet { group, points, table })
    }

    /// `G` acting on itself by translation.
    pub fn regular(group: FiniteAbelianGroup) -> Self {
        let m = group.order();
        let mut table = Vec::with_capacity(m * m);
        for a in group.elements() {
            for x in group.elements() {
                table.push(group.op(a, x));
            }
        }
        GSet {
            group,
            points: m,
            table,
        }
    }

    /// Every element fixes every point.
    pub fn trivial(group: FiniteAbelianGroup, points: usize) -> Self {
        let table = (0..group.order()).flat_map(|_| 0..points).collect();
        GSet { group, points, table }
    }

    /// The coset space `G/K` where `K` is generated by `subgroup_generators`.
    /// Cosets are numbered in order of their smallest element.
    pub fn coset_space(group: FiniteAbelianGroup, subgroup_generators: &[usize]) -> Result<Self> {
        for &k in subgroup_generators {
            group.check_element(k)?;
        }
        let subgroup = generated_subgroup(&group, subgroup_generators);
        let m = group.order();
        let mut coset_of = vec![usize::MAX; m];
        let mut count = 0;
        for a in group.elements() {
            if coset_of[a] == usize::MAX {
                for &k in &subgroup {
                    coset_of[group.op(a, k)] = count;
                }
                count += 1;
            }
        }
        let representative: Vec<usize> = (0..count)
            .map(|c| (0..m).find(|&a| coset_of[a] == c).unwrap())
            .collect();
        let mut table = Vec::with_capacity(m * count);
        for a in group.elements() {
            for &r in &representative {
                table.push(coset_of[group.op(a, r)]);
            }
        }
        Ok(GSet {
            group,
            points: count,
            table,
        })
    }

    /// Disjoint union; points of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &GSet) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::RankMismatch {
                expected: self.group.rank(),
                got: other.group.rank(),
            });
        }
        let n = self.points + other.points;
        let mut table = Vec::with_capacity(self.group.order() * n);
        for a in self.group.elements() {
            table.extend_from_slice(self.row(a));
            table.extend(other.row(a).iter().map(|&y| y + self.points));
        }
        Ok(GSet {
            group: self.group.clone(),
            points: n,
            table,
        })
    }

    /// Renames point `x` to `relabel[x]`.
    pub fn relabel(&self, relabel: &[usize]) -> Result<Self> {
        if !is_permutation(relabel, self.points) {
            return Err(Error::NotAPermutation {
                row: 0,
                points: self.points,
            });
        }
        let n = self.points;
        let mut table = vec![0; self.table.len()];
        for a in self.group.elements() {
            for x in 0..n {
                table[a * n + relabel[x]] = relabel[self.act(a, x)];
            }
        }
        Ok(GSet {
            group: self.group.clone(),
            points: n,
            table,
        })
    }

    /// A random G-set: a disjoint union of `orbits` coset spaces for random
    /// subgroups, with shuffled point labels.
    pub fn random<R: Rng>(group: FiniteAbelianGroup, orbits: usize, max_points: usize, rng: &mut R) -> Self {
        let mut x = GSet::trivial(group.clone(), 0);
        for _ in 0..orbits {
            let room = max_points - x.points;
            if room == 0 {
                break;
            }
            let orbit = loop {
                let gens: Vec<usize> = (0..rng.gen_range(0..=2))
                    .map(|_| rng.gen_range(0..group.order()))
                    .collect();
                let candidate = GSet::coset_space(group.clone(), &gens).unwrap();
                if candidate.points <= room {
                    break candidate;
                }
            };
            x = x.disjoint_union(&orbit).unwrap();
        }
        let mut labels: Vec<usize> = (0..x.points).collect();
        labels.shuffle(rng);
        x.relabel(&labels).unwrap()
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// `|X| = n`.
    pub fn points(&self) -> usize {
        self.points
    }

    /// `αx`.
    pub fn act(&self, alpha: usize, x: usize) -> usize {
        self.table[alpha * self.points + x]
    }

    /// Images of all points under `α`.
    pub fn row(&self, alpha: usize) -> &[usize] {
        &self.table[alpha * self.points..(alpha + 1) * self.points]
    }

    /// The full table, `m` rows of `n` entries.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.points];
        let mut out = Vec::new();
        for start in 0..self.points {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(x) = queue.pop_front() {
                orbit.push(x);
                for j in 0..self.group.rank() {
                    let y = self.act(self.group.generator(j), x);
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Index of the orbit containing each point.
    pub fn orbit_index(&self) -> Vec<usize> {
        let mut index = vec![0; self.points];
        for (k, orbit) in self.orbits().iter().enumerate() {
            for &x in orbit {
                index[x] = k;
            }
        }
        index
    }

    /// Elements acting as the identity permutation.
    pub fn action_kernel(&self) -> Vec<usize> {
        self.group
            .elements()
            .filter(|&a| self.row(a).iter().enumerate().all(|(x, &y)| x == y))
            .collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.action_kernel().len() == 1
    }

    /// Stabilizer of a point.
    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        self.group.elements().filter(|&a| self.act(a, x) == x).collect()
    }

    /// Number of points fixed by `α`.
    pub fn fixed_points(&self, alpha: usize) -> usize {
        self.row(alpha)
            .iter()
            .enumerate()
            .filter(|(x, &y)| *x == y)
            .count()
    }

    /// `(αf)(x) = f(α⁻¹x)`.
    pub fn act_on_function(&self, alpha: usize, f: &FunctionOnX) -> Result<FunctionOnX> {
        f.check_len(self.points)?;
        self.group.check_element(alpha)?;
        let inv = self.group.inverse(alpha);
        Ok(FunctionOnX::new(
            (0..self.points).map(|x| f[self.act(inv, x)]).collect(),
        ))
    }

    /// `(σ*f)(x) = Σ_α σ(α) f(α⁻¹x)`.
    pub fn convolve(&self, sigma: &FunctionOnG, f: &FunctionOnX) -> Result<FunctionOnX> {
        sigma.check_len(self.group.order())?;
        f.check_len(self.points)?;
        let mut out = FunctionOnX::zeros(self.points);
        for alpha in self.group.elements() {
            let s = sigma[alpha];
            if s.norm_sqr() == 0.0 {
                continue;
            }
            let inv = self.group.inverse(alpha);
            for x in 0..self.points {
                out[x] += s * f[self.act(inv, x)];
            }
        }
        Ok(out)
    }
}

/// All elements of the subgroup generated by `generators`, sorted.
pub fn generated_subgroup(group: &FiniteAbelianGroup, generators: &[usize]) -> Vec<usize> {
    let mut member = vec![false; group.order()];
    member[group.identity()] = true;
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(a) = queue.pop_front() {
        for &g in generators {
            let b = group.op(a, g);
            if !member[b] {
                member[b] = true;
                queue.push_back(b);
            }
        }
    }
    (0..group.order()).filter(|&a| member[a]).collect()
}
