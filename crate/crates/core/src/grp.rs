//! Permutation groups: deterministic Schreier-Sims, orbits and stabilizers
//! under arbitrary actions, conjugacy, Sylow subgroups, and exhaustive
//! subgroup searches in small groups via explicit multiplication tables.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use rand::Rng;

use crate::error::{Error, Result};

/// Element budget for traversals of whole groups.
pub const ENUMERATION_BUDGET: u64 = 2_000_000;

/// Orbit-size budget for orbit and stabilizer computations.
pub const ORBIT_BUDGET: usize = 1_000_000;

/// A permutation of `{0, .., n-1}`, stored as its image array. Products are
/// read left to right: `g.mul(h)` applies `g` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u32]>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::Precondition("image array is not a bijection".into()));
            }
            seen[x as usize] = true;
        }
        Ok(Perm(images.into_boxed_slice()))
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                let y = c[(k + 1) % c.len()];
                if x as usize >= n || y as usize >= n {
                    return Err(Error::Precondition("cycle entry out of range".into()));
                }
                img[x as usize] = y;
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, i: u32) -> u32 {
        self.0[i as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0u32; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Perm(out.into_boxed_slice())
    }

    pub fn pow(&self, e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `h^-1 self h`.
    pub fn conj(&self, h: &Perm) -> Perm {
        let mut out = vec![0u32; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            out[h.0[i] as usize] = h.0[x as usize];
        }
        Perm(out.into_boxed_slice())
    }

    /// `self^-1 h^-1 self h`.
    pub fn comm(&self, h: &Perm) -> Perm {
        self.inv().mul(&self.conj(h))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x as u32);
                x = self.0[x] as usize;
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.0.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    pos: Vec<u32>,
    reps: Vec<Perm>,
    inv_reps: Vec<Perm>,
}

const ABSENT: u32 = u32::MAX;

impl Level {
    fn new(degree: usize, point: u32, gens: Vec<Perm>) -> Self {
        let mut level =
            Level { point, gens, orbit: Vec::new(), pos: Vec::new(), reps: Vec::new(), inv_reps: Vec::new() };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.orbit = vec![self.point];
        self.pos = vec![ABSENT; degree];
        self.pos[self.point as usize] = 0;
        self.reps = vec![Perm::identity(degree)];
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for s in &self.gens {
                let q = s.image(p);
                if self.pos[q as usize] == ABSENT {
                    self.pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    self.reps.push(self.reps[i].mul(s));
                }
            }
            i += 1;
        }
        self.inv_reps = self.reps.iter().map(|r| r.inv()).collect();
    }

    #[inline]
    fn index(&self, p: u32) -> Option<usize> {
        let i = self.pos[p as usize];
        (i != ABSENT).then_some(i as usize)
    }
}

/// A permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, gens: Vec::new(), levels: Vec::new() }
    }

    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        Self::with_base_hint(degree, gens, &[])
    }

    /// Runs Schreier-Sims. Base points start with `hint`; further points are
    /// the smallest point moved by the element that needs them.
    pub fn with_base_hint(degree: usize, gens: Vec<Perm>, hint: &[u32]) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let mut base: Vec<u32> = Vec::new();
        for &h in hint {
            if (h as usize) < degree && !base.contains(&h) {
                base.push(h);
            }
        }
        for g in &gens {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.first_moved().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = Vec::new();
        for (i, &b) in base.iter().enumerate() {
            let lg: Vec<Perm> = gens.iter().filter(|g| base[..i].iter().all(|&c| g.image(c) == c)).cloned().collect();
            levels.push(Level::new(degree, b, lg));
        }
        let mut group = PermGroup { degree, gens: gens.clone(), levels };
        group.complete()?;
        group.trim_trivial_tail();
        Ok(group)
    }

    fn complete(&mut self) -> Result<()> {
        let degree = self.degree;
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            let mut restart: Option<usize> = None;
            'search: for pi in 0..self.levels[li].orbit.len() {
                for si in 0..self.levels[li].gens.len() {
                    let level = &self.levels[li];
                    let s = &level.gens[si];
                    let p = level.orbit[pi];
                    let q = s.image(p);
                    let qi = level.index(q).expect("orbit closed");
                    let h = level.reps[pi].mul(s).mul(&level.inv_reps[qi]);
                    if h.is_identity() {
                        continue;
                    }
                    let (y, j) = self.strip(h, li + 1);
                    if j < self.levels.len() || !y.is_identity() {
                        if j == self.levels.len() {
                            let b = y.first_moved().expect("non-identity");
                            self.levels.push(Level::new(degree, b, Vec::new()));
                        }
                        for l in (li + 1)..=j {
                            self.levels[l].gens.push(y.clone());
                            self.levels[l].rebuild(degree);
                        }
                        restart = Some(j);
                        break 'search;
                    }
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        Ok(())
    }

    fn trim_trivial_tail(&mut self) {
        while self.levels.last().is_some_and(|l| l.orbit.len() == 1 && l.gens.is_empty()) {
            self.levels.pop();
        }
    }

    /// Sifts `g` from level `start`; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it went through).
    fn strip(&self, g: Perm, start: usize) -> (Perm, usize) {
        let mut h = g;
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let p = h.image(level.point);
            match level.index(p) {
                None => return (h, l),
                Some(i) => h = h.mul(&level.inv_reps[i]),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if seen.insert(g.clone()) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Subgroup generated by `gens`, reusing this group's base.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        PermGroup::with_base_hint(self.degree, gens, &self.base())
    }

    /// Images of the base points; determines an element of this group.
    pub fn base_images(&self, g: &Perm) -> Vec<u32> {
        self.levels.iter().map(|l| g.image(l.point)).collect()
    }

    /// The element with the given base images, if there is one.
    pub fn element_with_base_images(&self, images: &[u32]) -> Option<Perm> {
        if images.len() != self.levels.len() {
            return None;
        }
        let mut targets = images.to_vec();
        let mut parts: Vec<&Perm> = Vec::with_capacity(self.levels.len());
        for (l, level) in self.levels.iter().enumerate() {
            let i = level.index(targets[l])?;
            parts.push(&level.reps[i]);
            let inv = &level.inv_reps[i];
            for t in targets.iter_mut().skip(l + 1) {
                *t = inv.image(*t);
            }
        }
        let g = parts.iter().rev().fold(self.identity(), |acc, u| acc.mul(u));
        (self.base_images(&g) == images).then_some(g)
    }

    /// The element of the right coset `self * g` whose images of `points`
    /// are lexicographically least. `points` must start with this group's
    /// base.
    pub fn min_coset_rep(&self, g: &Perm, points: &[u32]) -> Perm {
        debug_assert!(self.levels.iter().zip(points).all(|(l, &p)| l.point == p));
        let mut g = g.clone();
        for level in &self.levels {
            let best = (0..level.orbit.len()).min_by_key(|&i| g.image(level.orbit[i])).expect("nonempty orbit");
            g = level.reps[best].mul(&g);
        }
        g
    }

    /// Uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let mut g = self.identity();
        for level in self.levels.iter().rev() {
            let i = rng.gen_range(0..level.reps.len());
            g = g.mul(&level.reps[i]);
        }
        g
    }

    /// Visits every element once, as products `u_{k-1} ... u_0` of
    /// transversal elements. Stops early when `f` returns `false`.
    pub fn for_each_element(&self, mut f: impl FnMut(&Perm) -> bool) {
        fn rec(levels: &[Level], prefix: &Perm, f: &mut dyn FnMut(&Perm) -> bool) -> bool {
            match levels.split_last() {
                None => f(prefix),
                Some((last, rest)) => {
                    for r in &last.reps {
                        if !rec(rest, &prefix.mul(r), f) {
                            return false;
                        }
                    }
                    true
                }
            }
        }
        rec(&self.levels, &self.identity(), &mut f);
    }

    pub fn elements(&self, budget: u64) -> Result<Vec<Perm>> {
        if self.order() > budget {
            return Err(Error::Resource(format!("group of order {} exceeds element budget {budget}", self.order())));
        }
        let mut out = Vec::with_capacity(self.order() as usize);
        self.for_each_element(|g| {
            out.push(g.clone());
            true
        });
        Ok(out)
    }

    /// Orbit of a point under the group.
    pub fn point_orbit(&self, p: u32) -> Vec<u32> {
        orbit(&self.gens, p, |&x, g| g.image(x), usize::MAX).map(|o| o.points).unwrap_or_default()
    }

    pub fn to_cache_text(&self) -> String {
        let mut s = String::from("FORGE-BSGS 1\n");
        s.push_str(&format!("{}\n", self.degree));
        let base: Vec<String> = self.base().iter().map(|b| b.to_string()).collect();
        s.push_str(&base.join(" "));
        s.push('\n');
        for g in self.strong_generators() {
            let img: Vec<String> = g.images().iter().map(|x| x.to_string()).collect();
            s.push_str(&img.join(" "));
            s.push('\n');
        }
        s.push_str(&format!("order {}\n", self.order()));
        s
    }

    /// Rebuilds the stabilizer chain directly from cached strong generators,
    /// without Schreier-Sims, and checks the recorded order and that every
    /// element of `gens` is a member.
    pub fn from_cache_text(text: &str, gens: &[Perm]) -> Result<PermGroup> {
        let bad = |m: &str| Error::Cache(m.to_string());
        let mut lines = text.lines();
        if lines.next() != Some("FORGE-BSGS 1") {
            return Err(bad("missing header"));
        }
        let degree: usize =
            lines.next().ok_or_else(|| bad("missing degree"))?.trim().parse().map_err(|_| bad("bad degree"))?;
        let base_line = lines.next().ok_or_else(|| bad("missing base"))?;
        let base: Vec<u32> = base_line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad base point")))
            .collect::<Result<_>>()?;
        let mut strong = Vec::new();
        let mut recorded: Option<u64> = None;
        for line in lines {
            if let Some(rest) = line.strip_prefix("order ") {
                recorded = Some(rest.trim().parse().map_err(|_| bad("bad order"))?);
                break;
            }
            let img: Vec<u32> =
                line.split_whitespace().map(|t| t.parse().map_err(|_| bad("bad image"))).collect::<Result<_>>()?;
            if img.len() != degree {
                return Err(bad("generator of wrong degree"));
            }
            strong.push(Perm::from_images(img).map_err(|_| bad("generator is not a permutation"))?);
        }
        let recorded = recorded.ok_or_else(|| bad("missing order"))?;
        if base.iter().any(|&b| b as usize >= degree) {
            return Err(bad("base point out of range"));
        }
        let levels: Vec<Level> = base
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let lg = strong.iter().filter(|g| base[..i].iter().all(|&c| g.image(c) == c)).cloned().collect();
                Level::new(degree, b, lg)
            })
            .collect();
        let group = PermGroup { degree, gens: gens.to_vec(), levels };
        if group.order() != recorded {
            return Err(bad("recorded order does not match the stabilizer chain"));
        }
        if gens.iter().any(|g| !group.contains(g)) {
            return Err(bad("generators do not lie in the cached group"));
        }
        Ok(group)
    }
}

/// An orbit with a Schreier vector: `parent[i] = (j, s)` means
/// `points[i] = act(points[j], gens[s])`.
#[derive(Clone, Debug)]
pub struct Orbit<K> {
    pub points: Vec<K>,
    pub index: HashMap<K, usize>,
    pub parent: Vec<Option<(usize, usize)>>,
}

impl<K: Clone + Eq + Hash> Orbit<K> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, k: &K) -> bool {
        self.index.contains_key(k)
    }

    /// Generator indices of a word mapping the start point to `points[i]`.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = i;
        while let Some((p, s)) = self.parent[cur] {
            w.push(s);
            cur = p;
        }
        w.reverse();
        w
    }

    /// Transversal elements `u_i` with `start^{u_i} = points[i]`, in orbit order.
    pub fn transversal(&self, gens: &[Perm], degree: usize) -> Vec<Perm> {
        let mut reps: Vec<Perm> = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let r = match self.parent[i] {
                None => Perm::identity(degree),
                Some((p, s)) => reps[p].mul(&gens[s]),
            };
            reps.push(r);
        }
        reps
    }
}

/// Breadth-first orbit of `start` under `gens` acting through `act`.
pub fn orbit<K, F>(gens: &[Perm], start: K, act: F, budget: usize) -> Result<Orbit<K>>
where
    K: Clone + Eq + Hash,
    F: Fn(&K, &Perm) -> K,
{
    let mut points = vec![start.clone()];
    let mut index = HashMap::new();
    index.insert(start, 0usize);
    let mut parent = vec![None];
    let mut i = 0;
    while i < points.len() {
        for (si, s) in gens.iter().enumerate() {
            let q = act(&points[i], s);
            if !index.contains_key(&q) {
                if points.len() >= budget {
                    return Err(Error::Resource(format!("orbit exceeds budget {budget}")));
                }
                index.insert(q.clone(), points.len());
                points.push(q);
                parent.push(Some((i, si)));
            }
        }
        i += 1;
    }
    Ok(Orbit { points, index, parent })
}

/// Orbits of the group on a finite point set, in order of least element.
pub fn point_orbits(gens: &[Perm], degree: usize) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree as u32 {
        if seen[p as usize] {
            continue;
        }
        let o = orbit(gens, p, |&x, g| g.image(x), usize::MAX).expect("unbounded").points;
        for &q in &o {
            seen[q as usize] = true;
        }
        out.push(o);
    }
    out
}

/// Stabilizer of `start` under an action, from Schreier generators, together
/// with the orbit. The orbit-stabilizer identity is checked.
pub fn stabilizer<K, F>(g: &PermGroup, start: K, act: F, budget: usize) -> Result<(PermGroup, Orbit<K>)>
where
    K: Clone + Eq + Hash,
    F: Fn(&K, &Perm) -> K,
{
    let gens = g.generators();
    let orb = orbit(gens, start, &act, budget)?;
    let target = g.order() / orb.len() as u64;
    if target * orb.len() as u64 != g.order() {
        return Err(Error::Construction("orbit length does not divide the group order".into()));
    }
    let reps = orb.transversal(gens, g.degree());
    let base = g.base();
    let mut stab = PermGroup::trivial(g.degree());
    let mut stab_gens: Vec<Perm> = Vec::new();
    'outer: for (i, p) in orb.points.iter().enumerate() {
        for s in gens {
            if stab.order() == target {
                break 'outer;
            }
            let q = act(p, s);
            let qi = orb.index[&q];
            let h = reps[i].mul(s).mul(&reps[qi].inv());
            if !h.is_identity() && !stab.contains(&h) {
                stab_gens.push(h);
                stab = PermGroup::with_base_hint(g.degree(), stab_gens.clone(), &base)?;
            }
        }
    }
    if stab.order() != target {
        return Err(Error::Construction(format!(
            "stabilizer order {} times orbit length {} differs from group order {}",
            stab.order(),
            orb.len(),
            g.order()
        )));
    }
    Ok((stab, orb))
}

/// Conjugacy class of `x` as an orbit under conjugation.
pub fn conjugacy_class(g: &PermGroup, x: &Perm, budget: usize) -> Result<Orbit<Perm>> {
    orbit(g.generators(), x.clone(), |y, s| y.conj(s), budget)
}

/// `C_G(x)` as the stabilizer of `x` under conjugation.
pub fn centralizer(g: &PermGroup, x: &Perm) -> Result<PermGroup> {
    Ok(stabilizer(g, x.clone(), |y, s| y.conj(s), ORBIT_BUDGET)?.0)
}

/// Subgroup of `g` generated by the elements produced by `elems` that are not
/// already in it.
pub fn subgroup_from_elements<'a>(g: &PermGroup, elems: impl IntoIterator<Item = &'a Perm>) -> Result<PermGroup> {
    let base = g.base();
    let mut gens: Vec<Perm> = Vec::new();
    let mut h = PermGroup::trivial(g.degree());
    for x in elems {
        if !h.contains(x) {
            gens.push(x.clone());
            h = PermGroup::with_base_hint(g.degree(), gens.clone(), &base)?;
        }
    }
    Ok(h)
}

/// `C_G(x)` by traversal of all elements.
pub fn centralizer_bruteforce(g: &PermGroup, x: &Perm, budget: u64) -> Result<PermGroup> {
    if g.order() > budget {
        return Err(Error::Resource(format!("group of order {} exceeds budget {budget}", g.order())));
    }
    let mut found = Vec::new();
    let mut h = PermGroup::trivial(g.degree());
    let base = g.base();
    let mut err = None;
    g.for_each_element(|y| {
        if x.mul(y) == y.mul(x) && !h.contains(y) {
            found.push(y.clone());
            match PermGroup::with_base_hint(g.degree(), found.clone(), &base) {
                Ok(k) => h = k,
                Err(e) => {
                    err = Some(e);
                    return false;
                }
            }
        }
        true
    });
    match err {
        Some(e) => Err(e),
        None => Ok(h),
    }
}

/// Number of elements of `g` commuting with `x`, by traversal.
pub fn centralizer_order_bruteforce(g: &PermGroup, x: &Perm, budget: u64) -> Result<u64> {
    if g.order() > budget {
        return Err(Error::Resource(format!("group of order {} exceeds budget {budget}", g.order())));
    }
    let mut count = 0;
    g.for_each_element(|y| {
        if x.mul(y) == y.mul(x) {
            count += 1;
        }
        true
    });
    Ok(count)
}

/// `N_G(H)` by traversal of all elements of `g`.
pub fn normalizer_bruteforce(g: &PermGroup, h: &PermGroup, budget: u64) -> Result<PermGroup> {
    if g.order() > budget {
        return Err(Error::Resource(format!("group of order {} exceeds budget {budget}", g.order())));
    }
    let mut found = Vec::new();
    let mut n = h.clone();
    let base = g.base();
    found.extend(h.generators().iter().cloned());
    g.for_each_element(|y| {
        if !n.contains(y) && h.generators().iter().all(|k| h.contains(&k.conj(y))) {
            found.push(y.clone());
            n = PermGroup::with_base_hint(g.degree(), found.clone(), &base).expect("same degree");
        }
        true
    });
    Ok(n)
}

/// Smallest normal subgroup of `g` containing `gens`.
pub fn normal_closure(g: &PermGroup, gens: Vec<Perm>) -> Result<PermGroup> {
    let mut h = g.subgroup(gens)?;
    loop {
        let mut extra = None;
        'scan: for k in h.generators() {
            for s in g.generators() {
                let c = k.conj(s);
                if !h.contains(&c) {
                    extra = Some(c);
                    break 'scan;
                }
            }
        }
        match extra {
            None => return Ok(h),
            Some(c) => {
                let mut gs = h.generators().to_vec();
                gs.push(c);
                h = g.subgroup(gs)?;
            }
        }
    }
}

pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.comm(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, comms)
}

/// Intersection of two subgroups by traversal of the smaller one.
pub fn intersection(a: &PermGroup, b: &PermGroup, budget: u64) -> Result<PermGroup> {
    let (small, big) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let elems = small.elements(budget)?;
    subgroup_from_elements(small, elems.iter().filter(|x| big.contains(x)))
}

/// `O_p(G)` as the largest subset of the Sylow subgroup `s` closed under
/// conjugation by the generators of `g`.
pub fn p_core(g: &PermGroup, s: &PermGroup, budget: u64) -> Result<PermGroup> {
    let mut k: HashSet<Perm> = s.elements(budget)?.into_iter().collect();
    loop {
        let next: HashSet<Perm> =
            k.iter().filter(|x| g.generators().iter().all(|t| k.contains(&x.conj(t)))).cloned().collect();
        if next.len() == k.len() {
            break;
        }
        k = next;
    }
    let mut elems: Vec<Perm> = k.into_iter().collect();
    elems.sort();
    subgroup_from_elements(g, elems.iter())
}

/// Subgroup generated by the elements of order prime to `p`; for `p = 2` this is `O^2(G)`.
pub fn generated_by_p_prime_elements(g: &PermGroup, p: u64, budget: u64) -> Result<PermGroup> {
    let elems = g.elements(budget)?;
    subgroup_from_elements(g, elems.iter().filter(|x| x.order() % p != 0))
}

/// `p`-part of an element: `x^m` where `o(x) = p^a m`.
pub fn p_part_element(x: &Perm, p: u64) -> Perm {
    let o = x.order();
    x.pow(o / p_part(o, p))
}

/// A Sylow `p`-subgroup, found deterministically. Large groups are first
/// reduced to the centralizer of a `p`-element whose centralizer contains a
/// full Sylow subgroup; small groups are handled by climbing normalizers.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    const CLIMB_LIMIT: u64 = 60_000;
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(PermGroup::trivial(g.degree()));
    }
    if g.order() <= CLIMB_LIMIT {
        return sylow_climb(g, p);
    }
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(p);
    for _ in 0..400 {
        let x = p_part_element(&g.random_element(&mut rng), p);
        if x.is_identity() {
            continue;
        }
        // the p-part of an element of Z(P) centralizes all of P
        let c = centralizer(g, &x)?;
        if p_part(c.order(), p) == target && c.order() < g.order() {
            return sylow_subgroup(&c, p);
        }
    }
    Err(Error::Construction(format!("no reduction found for Sylow {p}-subgroup")))
}

fn sylow_climb(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let target = p_part(g.order(), p);
    let elems = g.elements(ENUMERATION_BUDGET)?;
    let mut pg = PermGroup::trivial(g.degree());
    while pg.order() < target {
        let next = elems.iter().find_map(|y| {
            if !pg.generators().iter().all(|k| pg.contains(&k.conj(y))) {
                return None;
            }
            let z = p_part_element(y, p);
            (!pg.contains(&z)).then_some(z)
        });
        let z = next.ok_or_else(|| Error::Construction("normalizer climb stalled".into()))?;
        let mut gens = pg.generators().to_vec();
        gens.push(z);
        pg = g.subgroup(gens)?;
    }
    Ok(pg)
}

/// A class of elements: a representative, the class size, and the members
/// found inside a given subgroup.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub rep: Perm,
    pub size: usize,
    pub members_in_subgroup: Vec<Perm>,
}

/// Partitions `candidates` into `g`-conjugacy classes, in order of first
/// appearance; each class is computed as an explicit conjugation orbit.
pub fn classes_of(g: &PermGroup, candidates: &[Perm], budget: usize) -> Result<Vec<ClassInfo>> {
    let mut assigned: HashSet<Perm> = HashSet::new();
    let mut out = Vec::new();
    for x in candidates {
        if assigned.contains(x) {
            continue;
        }
        let class = conjugacy_class(g, x, budget)?;
        let members: Vec<Perm> = candidates.iter().filter(|y| class.contains(y)).cloned().collect();
        for m in &members {
            assigned.insert(m.clone());
        }
        out.push(ClassInfo { rep: x.clone(), size: class.len(), members_in_subgroup: members });
    }
    Ok(out)
}

/// Set of element indices of a [`SmallGroupTable`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(Vec<u64>);

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet(vec![0; n.div_ceil(64)])
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let fresh = !self.contains(i);
        self.0[i / 64] |= 1 << (i % 64);
        fresh
    }

    pub fn contains(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| wi * 64 + b))
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// A group of order at most a few thousand given by its multiplication table.
#[derive(Clone, Debug)]
pub struct SmallGroupTable {
    n: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    identity: usize,
    orders: Vec<u32>,
}

impl SmallGroupTable {
    pub const MAX_ORDER: usize = 4096;

    pub fn from_mul(n: usize, identity: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if n > Self::MAX_ORDER {
            return Err(Error::Resource(format!("table of order {n} exceeds {}", Self::MAX_ORDER)));
        }
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let k = mul(i, j);
                if k >= n {
                    return Err(Error::Construction("multiplication leaves the element list".into()));
                }
                table[i * n + j] = k as u16;
            }
        }
        let mut inv = vec![u16::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] as usize == identity {
                    inv[i] = j as u16;
                    break;
                }
            }
            if inv[i] == u16::MAX {
                return Err(Error::Construction("element without inverse".into()));
            }
        }
        let mut t = SmallGroupTable { n, table, inv, identity, orders: Vec::new() };
        t.orders = (0..n)
            .map(|i| {
                let mut k = 1;
                let mut x = i;
                while x != identity {
                    x = t.mul(x, i);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(t)
    }

    /// Table for a permutation group; element `i` is `elems[i]`, with index 0 the identity.
    pub fn from_perm_group(g: &PermGroup) -> Result<(Self, Vec<Perm>)> {
        if g.order() > Self::MAX_ORDER as u64 {
            return Err(Error::Resource(format!("group of order {} too large for a table", g.order())));
        }
        let mut elems = g.elements(Self::MAX_ORDER as u64)?;
        elems.sort();
        let id = g.identity();
        let pos = elems.iter().position(|x| *x == id).expect("identity present");
        elems.swap(0, pos);
        elems[1..].sort();
        let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let t = SmallGroupTable::from_mul(elems.len(), 0, |i, j| index[&elems[i].mul(&elems[j])])?;
        Ok((t, elems))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn element_order(&self, i: usize) -> u32 {
        self.orders[i]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x^-1 y^-1 x y`.
    pub fn comm(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn all(&self) -> ElemSet {
        let mut s = ElemSet::empty(self.n);
        for i in 0..self.n {
            s.insert(i);
        }
        s
    }

    pub fn set_of(&self, elems: impl IntoIterator<Item = usize>) -> ElemSet {
        let mut s = ElemSet::empty(self.n);
        for i in elems {
            s.insert(i);
        }
        s
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> ElemSet {
        let mut s = ElemSet::empty(self.n);
        s.insert(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if s.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        s
    }

    pub fn is_subgroup(&self, s: &ElemSet) -> bool {
        s.contains(self.identity) && s.iter().all(|x| s.iter().all(|y| s.contains(self.mul(x, y))))
    }

    pub fn centralizer(&self, within: &ElemSet, of: &ElemSet) -> ElemSet {
        self.set_of(within.iter().filter(|&x| of.iter().all(|y| self.mul(x, y) == self.mul(y, x))))
    }

    pub fn center_of(&self, h: &ElemSet) -> ElemSet {
        self.centralizer(h, h)
    }

    pub fn center(&self) -> ElemSet {
        self.center_of(&self.all())
    }

    pub fn normalizer(&self, within: &ElemSet, h: &ElemSet) -> ElemSet {
        self.set_of(within.iter().filter(|&g| h.iter().all(|x| h.contains(self.conj(x, g)))))
    }

    pub fn commutator_subgroup(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut gens: Vec<usize> = Vec::new();
        let mut seen = ElemSet::empty(self.n);
        for x in a.iter() {
            for y in b.iter() {
                let c = self.comm(x, y);
                if seen.insert(c) {
                    gens.push(c);
                }
            }
        }
        self.generate(&gens)
    }

    pub fn derived_of(&self, h: &ElemSet) -> ElemSet {
        self.commutator_subgroup(h, h)
    }

    pub fn derived_subgroup(&self) -> ElemSet {
        self.derived_of(&self.all())
    }

    /// Frattini subgroup of a `p`-subgroup `h`: `h' h^p`.
    pub fn frattini_of(&self, h: &ElemSet, p: u32) -> ElemSet {
        let mut gens: Vec<usize> = self.derived_of(h).iter().collect();
        for x in h.iter() {
            let mut y = self.identity;
            for _ in 0..p {
                y = self.mul(y, x);
            }
            gens.push(y);
        }
        self.generate(&gens)
    }

    pub fn frattini(&self, p: u32) -> ElemSet {
        self.frattini_of(&self.all(), p)
    }

    pub fn exponent_of(&self, h: &ElemSet) -> u64 {
        h.iter().fold(1, |acc, x| lcm(acc, self.orders[x] as u64))
    }

    pub fn exponent(&self) -> u64 {
        self.exponent_of(&self.all())
    }

    pub fn is_abelian(&self, h: &ElemSet) -> bool {
        h.iter().all(|x| h.iter().all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_elementary_abelian(&self, h: &ElemSet, p: u32) -> bool {
        self.is_abelian(h) && h.iter().all(|x| x == self.identity || self.orders[x] == p)
    }

    /// `h` is extraspecial: `Z(h) = h' = Phi(h)` of order `p`.
    pub fn is_extraspecial(&self, h: &ElemSet, p: u32) -> bool {
        let z = self.center_of(h);
        z.len() == p as usize && self.derived_of(h) == z && self.frattini_of(h, p) == z
    }

    pub fn conjugate_set(&self, h: &ElemSet, g: usize) -> ElemSet {
        self.set_of(h.iter().map(|x| self.conj(x, g)))
    }

    /// All elementary abelian `p`-subgroups of `within` of order at least `p`,
    /// grouped by rank, grown by adjoining commuting elements of order `p`.
    pub fn elementary_abelian_subgroups(&self, within: &ElemSet, p: u32, budget: usize) -> Result<Vec<Vec<ElemSet>>> {
        let pelems: Vec<usize> = within.iter().filter(|&x| self.orders[x] == p).collect();
        let mut layers: Vec<Vec<ElemSet>> = Vec::new();
        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut current: Vec<ElemSet> = Vec::new();
        for &x in &pelems {
            let s = self.generate(&[x]);
            if seen.insert(s.clone()) {
                current.push(s);
            }
        }
        let mut total = current.len();
        while !current.is_empty() {
            let mut next = Vec::new();
            for e in &current {
                let c = self.centralizer(within, e);
                for &x in &pelems {
                    if e.contains(x) || !c.contains(x) {
                        continue;
                    }
                    let mut gens: Vec<usize> = e.iter().collect();
                    gens.push(x);
                    let s = self.generate(&gens);
                    if seen.insert(s.clone()) {
                        total += 1;
                        if total > budget {
                            return Err(Error::Resource(format!("more than {budget} elementary abelian subgroups")));
                        }
                        next.push(s);
                    }
                }
            }
            layers.push(std::mem::take(&mut current));
            current = next;
        }
        for l in &mut layers {
            l.sort();
        }
        Ok(layers)
    }

    /// All subgroups `k` of the `p`-group `top` with `bottom <= k` and
    /// `|k| <= max_order`, layer by layer: each layer adjoins to a subgroup
    /// `h` an element `x` of `N(h)` with `x^p` in `h`. Each layer's size is
    /// checked against the congruence `1 mod p` where it applies.
    pub fn subgroups_between(
        &self,
        bottom: &ElemSet,
        top: &ElemSet,
        p: u32,
        max_order: usize,
        budget: usize,
    ) -> Result<Vec<Vec<ElemSet>>> {
        let mut layers: Vec<Vec<ElemSet>> = vec![vec![bottom.clone()]];
        let mut total = 1;
        loop {
            let last = layers.last().unwrap();
            if last[0].len() * p as usize > max_order || last[0].len() >= top.len() {
                break;
            }
            let mut seen: HashSet<ElemSet> = HashSet::new();
            let mut next = Vec::new();
            for h in last {
                let n = self.normalizer(top, h);
                for x in n.iter() {
                    if h.contains(x) {
                        continue;
                    }
                    let mut y = self.identity;
                    for _ in 0..p {
                        y = self.mul(y, x);
                    }
                    if !h.contains(y) {
                        continue;
                    }
                    let mut gens: Vec<usize> = h.iter().collect();
                    gens.push(x);
                    let k = self.generate(&gens);
                    if seen.insert(k.clone()) {
                        total += 1;
                        if total > budget {
                            return Err(Error::Resource(format!("more than {budget} subgroups")));
                        }
                        next.push(k);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            if bottom.len() == 1 && next.len() % p as usize != 1 % p as usize {
                return Err(Error::Construction(format!(
                    "found {} subgroups of order {}, not 1 mod {p}",
                    next.len(),
                    next[0].len()
                )));
            }
            layers.push(next);
        }
        Ok(layers)
    }

    /// Subgroups of index `p` in the `p`-group `h`.
    pub fn maximal_subgroups(&self, h: &ElemSet, p: u32) -> Result<Vec<ElemSet>> {
        let phi = self.frattini_of(h, p);
        let layers = self.subgroups_between(&phi, h, p, h.len() / p as usize, 100_000)?;
        Ok(layers.into_iter().flatten().filter(|k| k.len() * p as usize == h.len()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn sym(n: usize) -> PermGroup {
        let t = Perm::from_cycles(n, &[&[0, 1]]).unwrap();
        let c: Vec<u32> = (0..n as u32).collect();
        let c = Perm::from_cycles(n, &[&c]).unwrap();
        PermGroup::new(n, vec![t, c]).unwrap()
    }

    fn dihedral(n: usize) -> PermGroup {
        let r: Vec<u32> = (0..n as u32).collect();
        let r = Perm::from_cycles(n, &[&r]).unwrap();
        let s = Perm::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect()).unwrap();
        PermGroup::new(n, vec![r, s]).unwrap()
    }

    fn quaternion() -> PermGroup {
        // regular representation of Q8 on {±1, ±i, ±j, ±k} = 0..8
        let i = Perm::from_cycles(8, &[&[0, 2, 1, 3], &[4, 6, 5, 7]]).unwrap();
        let j = Perm::from_cycles(8, &[&[0, 4, 1, 5], &[2, 7, 3, 6]]).unwrap();
        PermGroup::new(8, vec![i, j]).unwrap()
    }

    #[test]
    fn small_orders() {
        let s3 = PermGroup::new(
            3,
            vec![Perm::from_cycles(3, &[&[0, 1]]).unwrap(), Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()],
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(sym(7).order(), 5040);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(PermGroup::trivial(5).order(), 1);
        assert!(matches!(PermGroup::new(3, vec![Perm::identity(4)]), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn membership_matches_closure() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let a = Perm::from_cycles(8, &[&[0, 1, 2], &[3, 4]]).unwrap();
        let b = Perm::from_cycles(8, &[&[2, 3, 5, 6]]).unwrap();
        let g = PermGroup::new(8, vec![a.clone(), b.clone()]).unwrap();
        let mut closure: HashSet<Perm> = HashSet::from([Perm::identity(8)]);
        let mut queue = vec![Perm::identity(8)];
        while let Some(x) = queue.pop() {
            for s in [&a, &b] {
                let y = x.mul(s);
                if closure.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        assert_eq!(closure.len() as u64, g.order());
        let s8 = sym(8);
        for _ in 0..500 {
            let x = s8.random_element(&mut rng);
            assert_eq!(g.contains(&x), closure.contains(&x));
        }
        let elems: HashSet<Perm> = g.elements(100_000).unwrap().into_iter().collect();
        assert_eq!(elems, closure);
    }

    #[test]
    fn stabilizers_and_classes() {
        let s6 = sym(6);
        let (stab, orb) = stabilizer(&s6, 2u32, |&x, g| g.image(x), 100).unwrap();
        assert_eq!(orb.len(), 6);
        assert_eq!(stab.order(), 120);
        let t = Perm::from_cycles(6, &[&[0, 1]]).unwrap();
        assert_eq!(conjugacy_class(&s6, &t, 100).unwrap().len(), 15);
        assert_eq!(centralizer(&s6, &t).unwrap().order(), 48);
        assert_eq!(centralizer_bruteforce(&s6, &t, 1000).unwrap().order(), 48);
        assert_eq!(conjugacy_class(&s6, &Perm::identity(6), 100).unwrap().len(), 1);
        let id_orbit = orbit(&[], 4u32, |&x, g: &Perm| g.image(x), 10).unwrap();
        assert_eq!(id_orbit.points, vec![4]);
        assert!(stabilizer(&s6, 0u32, |&x, g| g.image(x), 3).is_err());
    }

    #[test]
    fn derived_and_closure() {
        let s5 = sym(5);
        assert_eq!(derived_subgroup(&s5).unwrap().order(), 60);
        let d = dihedral(4);
        assert_eq!(derived_subgroup(&d).unwrap().order(), 2);
        let a4 = derived_subgroup(&sym(4)).unwrap();
        let v4 = derived_subgroup(&a4).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(normalizer_bruteforce(&sym(4), &v4, 1000).unwrap().order(), 24);
    }

    #[test]
    fn sylow_subgroups() {
        let s7 = sym(7);
        for (p, ord) in [(2, 16), (3, 9), (5, 5), (7, 7), (11, 1)] {
            let s = sylow_subgroup(&s7, p).unwrap();
            assert_eq!(s.order(), ord);
            assert!(s.is_subgroup_of(&s7));
        }
        let s4 = sym(4);
        let p = sylow_subgroup(&s4, 2).unwrap();
        assert_eq!(p_core(&s4, &p, 1000).unwrap().order(), 4);
        assert_eq!(generated_by_p_prime_elements(&s4, 2, 1000).unwrap().order(), 12);
        let big = sym(9);
        assert_eq!(sylow_subgroup(&big, 3).unwrap().order(), 81);
    }

    #[test]
    fn table_invariants() {
        let (q8, _) = SmallGroupTable::from_perm_group(&quaternion()).unwrap();
        assert_eq!(q8.center().len(), 2);
        assert_eq!(q8.derived_subgroup().len(), 2);
        assert_eq!(q8.frattini(2).len(), 2);
        assert_eq!(q8.exponent(), 4);
        let ea = q8.elementary_abelian_subgroups(&q8.all(), 2, 100).unwrap();
        let all: Vec<&ElemSet> = ea.iter().flatten().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(*all[0], q8.center());
        assert!(q8.is_extraspecial(&q8.all(), 2));

        let (d8, _) = SmallGroupTable::from_perm_group(&dihedral(4)).unwrap();
        let layers = d8.subgroups_between(&d8.set_of([d8.identity()]), &d8.all(), 2, 8, 1000).unwrap();
        let counts: Vec<usize> = layers.iter().map(|l| l.len()).collect();
        assert_eq!(counts, vec![1, 5, 3, 1]);
        assert_eq!(counts.iter().sum::<usize>(), 10);
        assert_eq!(d8.maximal_subgroups(&d8.all(), 2).unwrap().len(), 3);
        let ea = d8.elementary_abelian_subgroups(&d8.all(), 2, 100).unwrap();
        assert_eq!(ea[1].len(), 2);
    }

    #[test]
    fn cache_roundtrip() {
        let g = sym(6);
        let text = g.to_cache_text();
        assert!(text.starts_with("FORGE-BSGS 1\n6\n"));
        let h = PermGroup::from_cache_text(&text, g.generators()).unwrap();
        assert_eq!(h.order(), 720);
        let corrupted = text.replace("order 720", "order 721");
        assert!(matches!(PermGroup::from_cache_text(&corrupted, g.generators()), Err(Error::Cache(_))));
    }

    proptest! {
        #[test]
        fn perm_group_laws(
            a in Just((0..9u32).collect::<Vec<_>>()).prop_shuffle(),
            b in Just((0..9u32).collect::<Vec<_>>()).prop_shuffle(),
        ) {
            let a = Perm::from_images(a).unwrap();
            let b = Perm::from_images(b).unwrap();
            prop_assert!(a.mul(&a.inv()).is_identity());
            prop_assert_eq!(a.conj(&b), b.inv().mul(&a).mul(&b));
            prop_assert!(a.pow(a.order()).is_identity());
            let g = PermGroup::new(9, vec![a.clone(), b.clone()]).unwrap();
            prop_assert!(g.contains(&a.mul(&b)));
            let lengths: u64 = g.orbit_lengths().iter().map(|&l| l as u64).product();
            prop_assert_eq!(lengths, g.order());
            let (stab, orb) = stabilizer(&g, 0u32, |&x, h| h.image(x), 100).unwrap();
            prop_assert_eq!(stab.order() * orb.len() as u64, g.order());
        }
    }
}
