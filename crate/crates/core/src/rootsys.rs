//! Root-system data for a connected reductive group.
//!
//! A group is described by its simple component types plus a central torus
//! rank. Characters live in ℤ^r with the basis "fundamental weights of each
//! component in order, then a basis of the central torus characters"; the
//! numbering of simple roots inside each component follows the conventions
//! documented in `docs/conventions.md` (short roots last in B, G2).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::linalg::{self, int, rat, to_rat_vec, Int, Rat, RatMat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSysError {
    #[error("invalid rank {rank} for type {kind}")]
    InvalidRank { kind: char, rank: usize },
    #[error("unknown simple root {0}")]
    UnknownRoot(String),
    #[error("character does not lie in the span of the simple roots")]
    NotInRootSpan,
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

/// Type of one simple component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl SimpleType {
    pub fn rank(&self) -> usize {
        match self {
            SimpleType::A(n) | SimpleType::B(n) | SimpleType::C(n) | SimpleType::D(n) => *n,
            SimpleType::E6 => 6,
            SimpleType::E7 => 7,
            SimpleType::E8 => 8,
            SimpleType::F4 => 4,
            SimpleType::G2 => 2,
        }
    }

    pub fn letter(&self) -> char {
        match self {
            SimpleType::A(_) => 'A',
            SimpleType::B(_) => 'B',
            SimpleType::C(_) => 'C',
            SimpleType::D(_) => 'D',
            SimpleType::E6 | SimpleType::E7 | SimpleType::E8 => 'E',
            SimpleType::F4 => 'F',
            SimpleType::G2 => 'G',
        }
    }

    pub fn validate(&self) -> Result<(), RootSysError> {
        let ok = match self {
            SimpleType::A(n) => *n >= 1,
            SimpleType::B(n) | SimpleType::C(n) => *n >= 2,
            SimpleType::D(n) => *n >= 3,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(RootSysError::InvalidRank { kind: self.letter(), rank: self.rank() })
        }
    }

    /// Cartan matrix with `c[i][j] = ⟨α_{j+1}, α_{i+1}^∨⟩`, so column j holds
    /// the fundamental-weight coordinates of the simple root α_{j+1}.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self {
            SimpleType::A(_) => {
                for i in 0..n - 1 {
                    edge(&mut c, i, i + 1);
                }
            }
            SimpleType::B(_) => {
                for i in 0..n - 1 {
                    edge(&mut c, i, i + 1);
                }
                // α_n short: ⟨α_{n-1}, α_n^∨⟩ = -2.
                c[n - 1][n - 2] = -2;
            }
            SimpleType::C(_) => {
                for i in 0..n - 1 {
                    edge(&mut c, i, i + 1);
                }
                // α_n long: ⟨α_n, α_{n-1}^∨⟩ = -2.
                c[n - 2][n - 1] = -2;
            }
            SimpleType::D(_) => {
                for i in 0..n - 2 {
                    edge(&mut c, i, i + 1);
                }
                edge(&mut c, n - 3, n - 1);
            }
            SimpleType::E6 | SimpleType::E7 | SimpleType::E8 => {
                for i in 0..n - 2 {
                    edge(&mut c, i, i + 1);
                }
                edge(&mut c, n - 4, n - 1);
            }
            SimpleType::F4 => {
                edge(&mut c, 0, 1);
                edge(&mut c, 1, 2);
                edge(&mut c, 2, 3);
                // α_2 long, α_3 short: ⟨α_2, α_3^∨⟩ = -2.
                c[2][1] = -2;
            }
            SimpleType::G2 => {
                // α_1 long, α_2 short: ⟨α_1, α_2^∨⟩ = -3.
                c[0][1] = -1;
                c[1][0] = -3;
            }
        }
        c
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::E6 => write!(f, "E6"),
            SimpleType::E7 => write!(f, "E7"),
            SimpleType::E8 => write!(f, "E8"),
            SimpleType::F4 => write!(f, "F4"),
            SimpleType::G2 => write!(f, "G2"),
            other => write!(f, "{}{}", other.letter(), other.rank()),
        }
    }
}

/// Name of a simple root: component index (0-based) and root index (1-based).
/// Rendered as `c{component}.a{index}` in external formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootId {
    pub component: usize,
    pub index: usize,
}

impl RootId {
    pub fn new(component: usize, index: usize) -> Self {
        RootId { component, index }
    }
}

impl fmt::Display for RootId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}.a{}", self.component, self.index)
    }
}

/// Dynkin types of the simple components plus the central torus rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductiveGroupData {
    pub components: Vec<SimpleType>,
    pub torus_rank: usize,
}

impl ReductiveGroupData {
    pub fn new(components: Vec<SimpleType>, torus_rank: usize) -> Result<Self, RootSysError> {
        for c in &components {
            c.validate()?;
        }
        Ok(ReductiveGroupData { components, torus_rank })
    }

    pub fn torus(rank: usize) -> Self {
        ReductiveGroupData { components: Vec::new(), torus_rank: rank }
    }

    /// Total character rank: sum of component ranks plus the torus rank.
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum::<usize>() + self.torus_rank
    }
}

/// One simple root with its coordinate data.
#[derive(Debug, Clone)]
pub struct SimpleRoot {
    pub id: RootId,
    /// Coordinate position of this root's fundamental weight (= of its coroot
    /// as a dual basis vector).
    pub position: usize,
    /// Character of the root in the ambient basis.
    pub vector: Vec<Int>,
}

/// Prepared root-system data for a [`ReductiveGroupData`].
#[derive(Debug, Clone)]
pub struct RootSystem {
    group: ReductiveGroupData,
    rank: usize,
    roots: Vec<SimpleRoot>,
    by_id: BTreeMap<RootId, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group
    }
}
impl Eq for RootSystem {}

impl RootSystem {
    pub fn new(group: ReductiveGroupData) -> Result<Self, RootSysError> {
        for c in &group.components {
            c.validate()?;
        }
        let rank = group.rank();
        let mut roots = Vec::new();
        let mut offset = 0usize;
        for (ci, comp) in group.components.iter().enumerate() {
            let cartan = comp.cartan_matrix();
            let n = comp.rank();
            for j in 0..n {
                let mut vector = vec![Int::zero(); rank];
                for i in 0..n {
                    vector[offset + i] = int(cartan[i][j]);
                }
                roots.push(SimpleRoot {
                    id: RootId::new(ci, j + 1),
                    position: offset + j,
                    vector,
                });
            }
            offset += n;
        }
        let by_id = roots.iter().enumerate().map(|(i, r)| (r.id, i)).collect();
        Ok(RootSystem { group, rank, roots, by_id })
    }

    pub fn group(&self) -> &ReductiveGroupData {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_roots(&self) -> &[SimpleRoot] {
        &self.roots
    }

    pub fn root_ids(&self) -> Vec<RootId> {
        self.roots.iter().map(|r| r.id).collect()
    }

    pub fn root(&self, id: RootId) -> Result<&SimpleRoot, RootSysError> {
        self.by_id
            .get(&id)
            .map(|&i| &self.roots[i])
            .ok_or_else(|| RootSysError::UnknownRoot(format!("{id}")))
    }

    /// The coroot as an explicit functional on the ambient character space:
    /// the dual basis vector at the root's fundamental-weight position.
    pub fn coroot_functional(&self, id: RootId) -> Result<Vec<Rat>, RootSysError> {
        let root = self.root(id)?;
        let mut f = vec![rat(0, 1); self.rank];
        f[root.position] = rat(1, 1);
        Ok(f)
    }

    /// `⟨character, α^∨⟩` for a simple root α.
    pub fn pair_coroot(&self, character: &[Int], id: RootId) -> Result<Int, RootSysError> {
        if character.len() != self.rank {
            return Err(RootSysError::Dimension { expected: self.rank, got: character.len() });
        }
        Ok(character[self.root(id)?.position].clone())
    }

    /// `⟨α_a, α_b^∨⟩` between simple roots.
    pub fn pairing(&self, a: RootId, b: RootId) -> Result<Int, RootSysError> {
        let va = self.root(a)?.vector.clone();
        self.pair_coroot(&va, b)
    }

    fn pairing_i64(&self, a: usize, b: usize) -> i64 {
        use num_traits::ToPrimitive;
        self.roots[a].vector[self.roots[b].position].to_i64().expect("small pairing")
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.pairing_i64(a, b) != 0
    }

    // -- dimensions ---------------------------------------------------------

    fn indices_of(&self, subset: &BTreeSet<RootId>) -> Result<Vec<usize>, RootSysError> {
        subset
            .iter()
            .map(|id| {
                self.by_id
                    .get(id)
                    .copied()
                    .ok_or_else(|| RootSysError::UnknownRoot(format!("{id}")))
            })
            .collect()
    }

    /// Number of positive roots of the subsystem generated by `subset`,
    /// computed by the root-string construction from the Cartan pairings.
    pub fn positive_root_count(&self, subset: &BTreeSet<RootId>) -> Result<usize, RootSysError> {
        let nodes = self.indices_of(subset)?;
        Ok(self.positive_roots_in(&nodes).len())
    }

    /// Positive roots of the subsystem generated by `nodes`, as coefficient
    /// vectors over `nodes`. Built height by height with the root-string law:
    /// β + α is a root iff the string depth below β exceeds ⟨β, α^∨⟩.
    fn positive_roots_in(&self, nodes: &[usize]) -> Vec<Vec<i64>> {
        let k = nodes.len();
        let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut level: Vec<Vec<i64>> = Vec::new();
        for i in 0..k {
            let mut v = vec![0i64; k];
            v[i] = 1;
            roots.insert(v.clone());
            level.push(v);
        }
        while !level.is_empty() {
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for beta in &level {
                for i in 0..k {
                    // ⟨β, α_i^∨⟩ over the subsystem.
                    let pairing: i64 =
                        (0..k).map(|j| beta[j] * self.pairing_i64(nodes[j], nodes[i])).sum();
                    // Depth of the α_i-string below β.
                    let mut down = 0i64;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if probe[i] < 0 || !roots.contains(&probe) {
                            break;
                        }
                        down += 1;
                    }
                    if down - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            level = next.into_iter().filter(|v| roots.insert(v.clone())).collect();
        }
        roots.into_iter().collect()
    }

    /// dim G = #roots + character rank.
    pub fn dim_group(&self) -> usize {
        let all: BTreeSet<RootId> = self.root_ids().into_iter().collect();
        2 * self.positive_root_count(&all).expect("own roots") + self.rank
    }

    pub fn dim_borel(&self) -> usize {
        let all: BTreeSet<RootId> = self.root_ids().into_iter().collect();
        self.positive_root_count(&all).expect("own roots") + self.rank
    }

    /// Dimension of the standard parabolic generated by the Borel and the
    /// minimal parabolics of `subset`.
    pub fn dim_parabolic(&self, subset: &BTreeSet<RootId>) -> Result<usize, RootSysError> {
        Ok(self.dim_borel() + self.positive_root_count(subset)?)
    }

    // -- support and root-lattice membership --------------------------------

    /// Rational coefficients of `character` over all simple roots, if the
    /// character lies in their span (torus coordinates must vanish).
    pub fn root_coefficients(&self, character: &[Int]) -> Result<Vec<Rat>, RootSysError> {
        if character.len() != self.rank {
            return Err(RootSysError::Dimension { expected: self.rank, got: character.len() });
        }
        let n = self.roots.len();
        if n == 0 {
            return if character.iter().all(Zero::is_zero) {
                Ok(Vec::new())
            } else {
                Err(RootSysError::NotInRootSpan)
            };
        }
        // Solve sum x_a * alpha_a = character.
        let mut m = RatMat::zero(self.rank, n + 1);
        for (a, root) in self.roots.iter().enumerate() {
            for i in 0..self.rank {
                *m.at_mut(i, a) = crate::linalg::rat_from_int(&root.vector[i]);
            }
        }
        for i in 0..self.rank {
            *m.at_mut(i, n) = crate::linalg::rat_from_int(&character[i]);
        }
        let pivots = linalg::rref(&mut m);
        if pivots.contains(&n) {
            return Err(RootSysError::NotInRootSpan);
        }
        let mut x = vec![rat(0, 1); n];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = m.at(row, n).clone();
        }
        Ok(x)
    }

    /// The simple roots appearing with nonzero coefficient.
    pub fn support(&self, character: &[Int]) -> Result<BTreeSet<RootId>, RootSysError> {
        let coeffs = self.root_coefficients(character)?;
        Ok(self
            .roots
            .iter()
            .zip(&coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, _)| r.id)
            .collect())
    }

    /// Whether the character is an integer combination of simple roots.
    pub fn root_lattice_membership(&self, character: &[Int]) -> Result<bool, RootSysError> {
        match self.root_coefficients(character) {
            Ok(coeffs) => Ok(coeffs.iter().all(|c| c.denom().is_positive() && c.is_integer())),
            Err(RootSysError::NotInRootSpan) => Ok(false),
            Err(e) => Err(e),
        }
    }

    // -- subdiagrams ---------------------------------------------------------

    /// Connected subsets of the Dynkin diagram isomorphic to the target,
    /// ordered according to the target's labeling (short roots last).
    pub fn find_subdiagrams(&self, target: SubdiagramTarget) -> Vec<Vec<RootId>> {
        let mut out = Vec::new();
        let size = match target {
            SubdiagramTarget::TypeB(k) => k,
            SubdiagramTarget::TypeG2 => 2,
        };
        if size < 2 {
            return out;
        }
        // Group root indices per component.
        let mut per_component: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, r) in self.roots.iter().enumerate() {
            per_component.entry(r.id.component).or_default().push(i);
        }
        for nodes in per_component.values() {
            if nodes.len() < size {
                continue;
            }
            for mask in 1u32..(1u32 << nodes.len()) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let subset: Vec<usize> = nodes
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect();
                if let Some((kind, ordered)) = self.classify_connected(&subset) {
                    let matches = match target {
                        SubdiagramTarget::TypeB(k) => kind == SimpleType::B(k),
                        SubdiagramTarget::TypeG2 => kind == SimpleType::G2,
                    };
                    if matches {
                        out.push(ordered.into_iter().map(|i| self.roots[i].id).collect());
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Classifies the induced subdiagram on `subset` (indices into `roots`),
    /// returning its type and the VO-ordered node list, or `None` when the
    /// subset is not connected. Two-node double-edge diagrams classify as B2.
    pub(crate) fn classify_connected(&self, subset: &[usize]) -> Option<(SimpleType, Vec<usize>)> {
        let k = subset.len();
        if k == 0 {
            return None;
        }
        if !self.is_connected(subset) {
            return None;
        }
        if k == 1 {
            return Some((SimpleType::A(1), subset.to_vec()));
        }
        // Edge multiplicities m(u,v) = p(u,v) * p(v,u).
        let mut multi: Vec<(usize, usize, i64)> = Vec::new();
        for (ai, &a) in subset.iter().enumerate() {
            for &b in &subset[ai + 1..] {
                if self.adjacent(a, b) {
                    let m = self.pairing_i64(a, b) * self.pairing_i64(b, a);
                    if m > 1 {
                        multi.push((a, b, m));
                    }
                }
            }
        }
        let degree = |v: usize| subset.iter().filter(|&&u| self.adjacent(u, v)).count();

        if let Some(&(a, b, m)) = multi.first() {
            if multi.len() > 1 {
                return None;
            }
            if m == 3 {
                if k != 2 {
                    return None;
                }
                // ⟨long, short^∨⟩ = -3: the -3 points at the short root.
                let (long, short) =
                    if self.pairing_i64(a, b) == -3 { (a, b) } else { (b, a) };
                return Some((SimpleType::G2, vec![long, short]));
            }
            // One double edge: the diagram must be a path.
            let path = self.as_path(subset)?;
            let pos_a = path.iter().position(|&x| x == a).unwrap();
            let pos_b = path.iter().position(|&x| x == b).unwrap();
            let (lo, hi) = (pos_a.min(pos_b), pos_a.max(pos_b));
            if hi != lo + 1 {
                return None;
            }
            if lo > 0 && hi < k - 1 {
                // Double edge in the middle: F4, oriented long side first.
                if k != 4 {
                    return None;
                }
                return self.check_f4(&path).or_else(|| {
                    let rev: Vec<usize> = path.iter().rev().copied().collect();
                    self.check_f4(&rev)
                });
            }
            // Double edge at one end: orient the path so it comes last.
            let path = if hi == k - 1 { path } else { path.into_iter().rev().collect() };
            let (u, v) = (path[k - 2], path[k - 1]);
            // ⟨u, v^∨⟩ = -2 means the leaf v is short: type B. Otherwise C.
            let kind = if self.pairing_i64(u, v) == -2 {
                SimpleType::B(k)
            } else {
                SimpleType::C(k)
            };
            if kind == SimpleType::C(2) {
                // B2 and C2 coincide; canonicalize as B2 (short root last).
                return Some((SimpleType::B(2), vec![path[1], path[0]]));
            }
            return Some((kind, path));
        }

        // Simply laced.
        let branch: Vec<usize> = subset.iter().copied().filter(|&v| degree(v) >= 3).collect();
        match branch.len() {
            0 => {
                let path = self.as_path(subset)?;
                Some((SimpleType::A(k), path))
            }
            1 => {
                let center = branch[0];
                if degree(center) != 3 {
                    return None;
                }
                let mut arms: Vec<Vec<usize>> = Vec::new();
                for &start in subset.iter().filter(|&&v| self.adjacent(v, center)) {
                    let mut arm = vec![start];
                    let mut prev = center;
                    loop {
                        let next = subset
                            .iter()
                            .copied()
                            .find(|&v| v != prev && self.adjacent(v, *arm.last().unwrap()));
                        match next {
                            Some(v) => {
                                prev = *arm.last().unwrap();
                                arm.push(v);
                            }
                            None => break,
                        }
                    }
                    arms.push(arm);
                }
                if arms.len() != 3 {
                    return None;
                }
                arms.sort_by_key(|a| (a.len(), self.roots[a[0]].id));
                let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
                match (lens[0], lens[1], lens[2]) {
                    (1, 1, m) => {
                        // D_{m+3}: long arm reversed, then center, then leaves.
                        let mut path: Vec<usize> =
                            arms[2].iter().rev().copied().collect();
                        path.push(center);
                        path.push(arms[0][0]);
                        path.push(arms[1][0]);
                        Some((SimpleType::D(m + 3), path))
                    }
                    (1, 2, 2) => {
                        // E6: five-node chain through the center, branch last.
                        let mut path: Vec<usize> = arms[1].iter().rev().copied().collect();
                        path.push(center);
                        path.extend(&arms[2]);
                        path.push(arms[0][0]);
                        Some((SimpleType::E6, path))
                    }
                    (1, 2, 3) => {
                        let mut path: Vec<usize> = arms[2].iter().rev().copied().collect();
                        path.push(center);
                        path.extend(&arms[1]);
                        path.push(arms[0][0]);
                        Some((SimpleType::E7, path))
                    }
                    (1, 2, 4) => {
                        let mut path: Vec<usize> = arms[2].iter().rev().copied().collect();
                        path.push(center);
                        path.extend(&arms[1]);
                        path.push(arms[0][0]);
                        Some((SimpleType::E8, path))
                    }
                    _ => None,
                }
            }
            _ => None,
        }
    }

    fn check_f4(&self, path: &[usize]) -> Option<(SimpleType, Vec<usize>)> {
        // path[1] must be long, path[2] short: ⟨path[1], path[2]^∨⟩ = -2.
        if path.len() == 4 && self.pairing_i64(path[1], path[2]) == -2 {
            Some((SimpleType::F4, path.to_vec()))
        } else {
            None
        }
    }

    /// Orders `subset` as a path when its induced diagram is one, choosing the
    /// endpoint with the smaller id first.
    fn as_path(&self, subset: &[usize]) -> Option<Vec<usize>> {
        let k = subset.len();
        if k == 1 {
            return Some(subset.to_vec());
        }
        let mut ends = Vec::new();
        for &v in subset {
            let d = subset.iter().filter(|&&u| self.adjacent(u, v)).count();
            match d {
                1 => ends.push(v),
                2 => {}
                _ => return None,
            }
        }
        if ends.len() != 2 {
            return None;
        }
        ends.sort_by_key(|&v| self.roots[v].id);
        let mut path = vec![ends[0]];
        let mut prev = usize::MAX;
        while path.len() < k {
            let cur = *path.last().unwrap();
            let next = subset
                .iter()
                .copied()
                .find(|&v| v != prev && v != cur && self.adjacent(v, cur))?;
            prev = cur;
            path.push(next);
        }
        Some(path)
    }

    fn is_connected(&self, subset: &[usize]) -> bool {
        if subset.is_empty() {
            return false;
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![subset[0]];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for &u in subset {
                if !seen.contains(&u) && self.adjacent(u, v) {
                    stack.push(u);
                }
            }
        }
        seen.len() == subset.len()
    }

    /// Connected components of the induced diagram on `subset`, classified
    /// and VO-ordered. Components are sorted by their smallest member.
    pub fn classify_subset(
        &self,
        subset: &BTreeSet<RootId>,
    ) -> Result<Vec<(SimpleType, Vec<RootId>)>, RootSysError> {
        let nodes = self.indices_of(subset)?;
        let mut remaining: BTreeSet<usize> = nodes.into_iter().collect();
        let mut components = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = vec![start];
            let mut stack = vec![start];
            remaining.remove(&start);
            while let Some(v) = stack.pop() {
                let neighbors: Vec<usize> =
                    remaining.iter().copied().filter(|&u| self.adjacent(u, v)).collect();
                for u in neighbors {
                    remaining.remove(&u);
                    comp.push(u);
                    stack.push(u);
                }
            }
            comp.sort();
            let (kind, ordered) = self
                .classify_connected(&comp)
                .expect("connected component of a Dynkin diagram is a Dynkin diagram");
            components.push((kind, ordered.into_iter().map(|i| self.roots[i].id).collect()));
        }
        components.sort_by_key(|(_, ids): &(SimpleType, Vec<RootId>)| ids.iter().min().copied());
        Ok(components)
    }

    /// Rational span of a set of simple roots contains `character`?
    pub fn in_root_span_of(
        &self,
        subset: &BTreeSet<RootId>,
        character: &[Int],
    ) -> Result<bool, RootSysError> {
        let coeffs = match self.root_coefficients(character) {
            Ok(c) => c,
            Err(RootSysError::NotInRootSpan) => return Ok(false),
            Err(e) => return Err(e),
        };
        for (root, c) in self.roots.iter().zip(&coeffs) {
            if !c.is_zero() && !subset.contains(&root.id) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Target shapes for [`RootSystem::find_subdiagrams`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubdiagramTarget {
    /// B_k with k >= 2 (two-node double-edge diagrams count as B2).
    TypeB(usize),
    TypeG2,
}

/// Sum of the simple-root characters in `ids`.
pub fn sum_of_roots(system: &RootSystem, ids: &[RootId]) -> Result<Vec<Int>, RootSysError> {
    let mut v = vec![Int::zero(); system.rank()];
    for id in ids {
        let root = system.root(*id)?;
        for (x, y) in v.iter_mut().zip(&root.vector) {
            *x += y;
        }
    }
    Ok(v)
}

/// `to_rat_vec` re-export for callers pairing characters with functionals.
pub fn character_to_rat(v: &[Int]) -> Vec<Rat> {
    to_rat_vec(v)
}
