//! Coset chamber systems. Chambers are right cosets `Tg`; `Tg` and `Th` are
//! `k`-adjacent when `h g^-1` lies in the parabolic `P_k`. Rank 2 residues
//! are recognised as digons, projective planes or quadrangles of order 2.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grp::{Perm, PermGroup};

/// The right cosets of `T` in `G`, each keyed by the base images of its
/// lexicographically least element.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    g: PermGroup,
    t: PermGroup,
    base: Vec<u32>,
    reps: Vec<Perm>,
    index: HashMap<Vec<u32>, usize>,
}

impl CosetSpace {
    pub fn new(g: &PermGroup, t: &PermGroup, budget: usize) -> Result<Self> {
        if !t.is_subgroup_of(g) {
            return Err(Error::Precondition("T is not contained in G".into()));
        }
        let index_bound = g.order() / t.order().max(1);
        if index_bound > budget as u64 {
            return Err(Error::Resource(format!("{index_bound} cosets exceed budget {budget}")));
        }
        let t = g.subgroup(t.generators().to_vec())?;
        let mut space = CosetSpace { g: g.clone(), t, base: g.base(), reps: Vec::new(), index: HashMap::new() };
        let id = g.identity();
        let first = space.canonical(&id);
        space.index.insert(space.g.base_images(&first), 0);
        space.reps.push(first);
        let mut i = 0;
        while i < space.reps.len() {
            for s in g.generators() {
                let x = space.canonical(&space.reps[i].mul(s));
                let key = space.g.base_images(&x);
                if !space.index.contains_key(&key) {
                    space.index.insert(key, space.reps.len());
                    space.reps.push(x);
                }
            }
            i += 1;
        }
        if space.reps.len() as u64 != index_bound {
            return Err(Error::Construction(format!("found {} cosets, expected {index_bound}", space.reps.len())));
        }
        Ok(space)
    }

    fn canonical(&self, x: &Perm) -> Perm {
        self.t.min_coset_rep(x, &self.base)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn group(&self) -> &PermGroup {
        &self.g
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.t
    }

    /// Canonical representative of coset `i`; coset 0 is `T` itself.
    pub fn rep(&self, i: usize) -> &Perm {
        &self.reps[i]
    }

    /// Index of the coset `T x`.
    pub fn index_of(&self, x: &Perm) -> usize {
        self.index[&self.g.base_images(&self.canonical(x))]
    }

    /// Index of `(T g_i) x`.
    pub fn act(&self, i: usize, x: &Perm) -> usize {
        self.index_of(&self.reps[i].mul(x))
    }

    /// Orbits of a subgroup `h` of `G` acting on the cosets by right multiplication.
    pub fn orbits_of(&self, h: &PermGroup) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                for s in h.generators() {
                    let j = self.act(orbit[k], s);
                    if !seen[j] {
                        seen[j] = true;
                        orbit.push(j);
                    }
                }
                k += 1;
            }
            out.push(orbit);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rank2Kind {
    #[serde(rename = "digon")]
    Digon,
    #[serde(rename = "PG(2,2)")]
    ProjectivePlane,
    #[serde(rename = "GQ(2,2)")]
    Quadrangle,
    #[serde(rename = "other")]
    Other,
}

impl Rank2Kind {
    pub fn label(self) -> &'static str {
        match self {
            Rank2Kind::Digon => "digon",
            Rank2Kind::ProjectivePlane => "PG(2,2)",
            Rank2Kind::Quadrangle => "GQ(2,2)",
            Rank2Kind::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueReport {
    pub colours: Vec<usize>,
    pub size: usize,
    pub kind: Option<Rank2Kind>,
    /// Chambers per panel, for each colour in `colours`.
    pub panel_sizes: Vec<usize>,
}

/// A chamber system on the cosets of `T` with one colour per parabolic;
/// colours are numbered from 1.
#[derive(Clone, Debug)]
pub struct ChamberSystem {
    space: CosetSpace,
    /// `panel_of[k][c]` is the id of the colour `k+1` panel containing chamber `c`.
    panel_of: Vec<Vec<usize>>,
    panels: Vec<Vec<Vec<usize>>>,
}

pub fn build_coset_chambers(
    g: &PermGroup,
    t: &PermGroup,
    parabolics: &[PermGroup],
    budget: usize,
) -> Result<ChamberSystem> {
    for (k, p) in parabolics.iter().enumerate() {
        if !t.is_subgroup_of(p) || !p.is_subgroup_of(g) {
            return Err(Error::Precondition(format!("parabolic {} does not lie between T and G", k + 1)));
        }
    }
    let space = CosetSpace::new(g, t, budget)?;
    let mut panel_of = Vec::new();
    let mut panels = Vec::new();
    for p in parabolics {
        let local: Vec<Perm> = space.orbits_of(p)[0].iter().map(|&j| space.rep(j).clone()).collect();
        let mut ids = vec![usize::MAX; space.len()];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for c in 0..space.len() {
            if ids[c] != usize::MAX {
                continue;
            }
            let mut panel: Vec<usize> = local.iter().map(|x| space.index_of(&x.mul(space.rep(c)))).collect();
            panel.sort_unstable();
            panel.dedup();
            for &d in &panel {
                ids[d] = members.len();
            }
            members.push(panel);
        }
        panel_of.push(ids);
        panels.push(members);
    }
    Ok(ChamberSystem { space, panel_of, panels })
}

impl ChamberSystem {
    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.panels.len()
    }

    pub fn space(&self) -> &CosetSpace {
        &self.space
    }

    /// Panels of a colour (numbered from 1) as sorted chamber lists.
    pub fn panels(&self, colour: usize) -> &[Vec<usize>] {
        &self.panels[colour - 1]
    }

    pub fn adjacent(&self, colour: usize, a: usize, b: usize) -> bool {
        self.panel_of[colour - 1][a] == self.panel_of[colour - 1][b]
    }

    /// Sizes of all panels of a colour, deduplicated.
    pub fn panel_sizes(&self, colour: usize) -> Vec<usize> {
        let mut s: Vec<usize> = self.panels(colour).iter().map(|p| p.len()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// True if every generator of `G` maps panels to panels of the same colour.
    pub fn action_preserves_colours(&self) -> bool {
        (1..=self.rank()).all(|k| {
            self.space.group().generators().iter().all(|s| {
                self.panels(k).iter().all(|panel| {
                    let img: Vec<usize> = panel.iter().map(|&c| self.space.act(c, s)).collect();
                    img.iter().all(|&c| self.adjacent(k, c, img[0]))
                })
            })
        })
    }

    /// Connected components for the colours in `colours`.
    pub fn components(&self, colours: &[usize]) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let c = members[k];
                for &col in colours {
                    let panel = &self.panels[col - 1][self.panel_of[col - 1][c]];
                    for &d in panel {
                        if comp[d] == usize::MAX {
                            comp[d] = id;
                            members.push(d);
                        }
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The residue of type `colours` containing chamber `c`.
    pub fn residue(&self, c: usize, colours: &[usize]) -> ResidueReport {
        let comp = self
            .components(colours)
            .into_iter()
            .find(|m| m.binary_search(&c).is_ok())
            .expect("chamber lies in a component");
        let kind = (colours.len() == 2).then(|| self.classify_rank2(&comp, colours[0], colours[1]));
        let panel_sizes = colours
            .iter()
            .map(|&col| {
                let p = &self.panels[col - 1][self.panel_of[col - 1][c]];
                p.len()
            })
            .collect();
        ResidueReport { colours: colours.to_vec(), size: comp.len(), kind, panel_sizes }
    }

    /// Classifies a rank 2 residue through its incidence graph: panels of
    /// colour `i` are points, panels of colour `j` are lines and chambers are flags.
    pub fn classify_rank2(&self, residue: &[usize], i: usize, j: usize) -> Rank2Kind {
        let mut points: HashMap<usize, usize> = HashMap::new();
        let mut lines: HashMap<usize, usize> = HashMap::new();
        let mut flags = Vec::new();
        for &c in residue {
            let np = points.len();
            let p = *points.entry(self.panel_of[i - 1][c]).or_insert(np);
            let nl = lines.len();
            let l = *lines.entry(self.panel_of[j - 1][c]).or_insert(nl);
            flags.push((p, l));
        }
        classify_incidence(points.len(), lines.len(), &flags)
    }
}

/// Girth and diameter of a connected graph; girth is `None` for forests.
pub fn girth_and_diameter(adj: &[Vec<usize>]) -> (Option<usize>, usize) {
    let n = adj.len();
    let mut girth: Option<usize> = None;
    let mut diameter = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let cycle = dist[u] + dist[v] + 1;
                    girth = Some(girth.map_or(cycle, |g| g.min(cycle)));
                }
            }
        }
        diameter = diameter.max(dist.iter().copied().filter(|&d| d != usize::MAX).max().unwrap_or(0));
        if dist.contains(&usize::MAX) {
            diameter = usize::MAX;
        }
    }
    (girth, diameter)
}

/// Recognises an incidence structure given by its flags.
pub fn classify_incidence(n_points: usize, n_lines: usize, flags: &[(usize, usize)]) -> Rank2Kind {
    let mut adj = vec![Vec::new(); n_points + n_lines];
    for &(p, l) in flags {
        adj[p].push(n_points + l);
        adj[n_points + l].push(p);
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    if flags.len() == n_points * n_lines && adj.iter().all(|a| !a.is_empty()) {
        return Rank2Kind::Digon;
    }
    if adj.iter().any(|a| a.len() != 3) {
        return Rank2Kind::Other;
    }
    match girth_and_diameter(&adj) {
        (Some(6), 3) => Rank2Kind::ProjectivePlane,
        (Some(8), 4) => Rank2Kind::Quadrangle,
        _ => Rank2Kind::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano_flags() -> Vec<(usize, usize)> {
        // lines {i, i+1, i+3} mod 7
        (0..7).flat_map(|l| [l, (l + 1) % 7, (l + 3) % 7].into_iter().map(move |p| (p, l))).collect()
    }

    fn gq22_flags() -> (usize, usize, Vec<(usize, usize)>) {
        // points: 2-subsets of {0..5}; lines: partitions into three 2-subsets
        let mut pts = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                pts.push((a, b));
            }
        }
        let mut lines: Vec<[usize; 3]> = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            for (j, q) in pts.iter().enumerate().skip(i + 1) {
                for (k, r) in pts.iter().enumerate().skip(j + 1) {
                    let mut all = [p.0, p.1, q.0, q.1, r.0, r.1];
                    all.sort_unstable();
                    if all == [0, 1, 2, 3, 4, 5] {
                        lines.push([i, j, k]);
                    }
                }
            }
        }
        let flags = lines.iter().enumerate().flat_map(|(l, ps)| ps.iter().map(move |&p| (p, l))).collect();
        (pts.len(), lines.len(), flags)
    }

    #[test]
    fn incidence_fixtures() {
        assert_eq!(classify_incidence(7, 7, &fano_flags()), Rank2Kind::ProjectivePlane);
        let (np, nl, flags) = gq22_flags();
        assert_eq!((np, nl, flags.len()), (15, 15, 45));
        assert_eq!(classify_incidence(np, nl, &flags), Rank2Kind::Quadrangle);
        let digon: Vec<(usize, usize)> = (0..3).flat_map(|p| (0..3).map(move |l| (p, l))).collect();
        assert_eq!(classify_incidence(3, 3, &digon), Rank2Kind::Digon);
        let mut broken = fano_flags();
        broken.pop();
        assert_eq!(classify_incidence(7, 7, &broken), Rank2Kind::Other);
    }

    #[test]
    fn sym4_chamber_system() {
        // Sym(4) with T = 1 and P_k = <(k k+1)>: the thin Coxeter complex of type A3
        let gens: Vec<Perm> = (0..3).map(|k| Perm::from_cycles(4, &[&[k, k + 1]]).unwrap()).collect();
        let g = PermGroup::new(4, gens.clone()).unwrap();
        let t = PermGroup::trivial(4);
        let ps: Vec<PermGroup> = gens.iter().map(|s| g.subgroup(vec![s.clone()]).unwrap()).collect();
        let cs = build_coset_chambers(&g, &t, &ps, 1000).unwrap();
        assert_eq!(cs.len(), 24);
        for k in 1..=3 {
            assert_eq!(cs.panel_sizes(k), vec![2]);
        }
        assert!(cs.action_preserves_colours());
        assert_eq!(cs.residue(0, &[1, 2]).size, 6);
        assert_eq!(cs.residue(0, &[1, 3]).size, 4);
        assert_eq!(cs.residue(0, &[1, 3]).kind, Some(Rank2Kind::Digon));
    }

    #[test]
    fn trivial_system() {
        let g = PermGroup::trivial(3);
        let cs = build_coset_chambers(&g, &g, &[g.clone(), g.clone()], 10).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.panels(1), &[vec![0]]);
    }

    #[test]
    fn containment_is_checked() {
        let s = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let g = PermGroup::new(3, vec![s.clone()]).unwrap();
        let big = PermGroup::new(3, vec![Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        assert!(build_coset_chambers(&g, &PermGroup::trivial(3), &[big], 10).is_err());
    }
}
