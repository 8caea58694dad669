//! Finite orthogonality graphs and their two-valued colorings.
//!
//! A graph carries edges (orthogonal pairs) and triads (mutually orthogonal
//! triples). A [`Valuation`] assigns each vertex a truth value such that no
//! edge has two true ends and every triad has exactly one true vertex.
//! [`find_valuation`] decides whether one exists by backtracking with unit
//! propagation; [`chromatic_coloring`] searches for proper colorings with a
//! bounded number of colors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::coloring::{reduced_two_color, sphere_color, Axis};
use crate::error::{Error, Result};
use crate::rays::{dot, parse_triple, PrimitiveVec3, SpherePoint};

/// A graph vertex: a label, and the ray it stands for when the graph is
/// geometric.
///
/// Vertices order by ray first (label-only vertices come first), then label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    ray: Option<PrimitiveVec3>,
    label: String,
}

impl Vertex {
    pub fn labelled(label: impl Into<String>) -> Self {
        Vertex {
            ray: None,
            label: label.into(),
        }
    }

    /// A ray vertex labelled `x,y,z`.
    pub fn ray(ray: PrimitiveVec3) -> Self {
        let label = ray_label(&ray);
        Vertex {
            ray: Some(ray),
            label,
        }
    }

    pub fn labelled_ray(label: impl Into<String>, ray: PrimitiveVec3) -> Self {
        Vertex {
            ray: Some(ray),
            label: label.into(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn as_ray(&self) -> Option<&PrimitiveVec3> {
        self.ray.as_ref()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn ray_label(ray: &PrimitiveVec3) -> String {
    format!("{},{},{}", ray.x(), ray.y(), ray.z())
}

/// Vertices in sorted order, with edges and triads over vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    triads: Vec<[usize; 3]>,
    neighbors: Vec<Vec<usize>>,
    triads_of: Vec<Vec<usize>>,
}

impl OrthoGraph {
    /// Builds a graph from vertices and index-based constraints. Indices refer
    /// to positions in `vertices`; the graph stores vertices sorted and remaps
    /// them.
    ///
    /// Every pair inside a triad becomes an edge. With `triads = None`, the
    /// triads are all triangles of the edge set.
    pub fn new(
        vertices: Vec<Vertex>,
        edges: &[(usize, usize)],
        triads: Option<&[[usize; 3]]>,
    ) -> Result<Self> {
        let n = vertices.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        let mut remap = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let sorted: Vec<Vertex> = order.iter().map(|&i| vertices[i].clone()).collect();
        for w in sorted.windows(2) {
            if w[0].label == w[1].label {
                return Err(Error::InvalidArgument(format!(
                    "duplicate vertex {}",
                    w[0].label
                )));
            }
            if w[0].ray.is_some() && w[0].ray == w[1].ray {
                return Err(Error::InvalidArgument(format!(
                    "vertices {} and {} are the same ray",
                    w[0].label, w[1].label
                )));
            }
        }
        let check = |i: usize| {
            if i < n {
                Ok(remap[i])
            } else {
                Err(Error::InvalidArgument(format!(
                    "vertex index {i} out of range"
                )))
            }
        };

        let mut edge_set = BTreeSet::new();
        for &(a, b) in edges {
            let (a, b) = (check(a)?, check(b)?);
            if a == b {
                return Err(Error::InvalidArgument(format!(
                    "self-loop at {}",
                    sorted[a].label
                )));
            }
            edge_set.insert((a.min(b), a.max(b)));
        }
        let mut triad_set = BTreeSet::new();
        if let Some(triads) = triads {
            for t in triads {
                let mut t = [check(t[0])?, check(t[1])?, check(t[2])?];
                t.sort_unstable();
                if t[0] == t[1] || t[1] == t[2] {
                    return Err(Error::InvalidArgument(format!(
                        "triad repeats vertex {}",
                        sorted[t[1]].label
                    )));
                }
                edge_set.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
                triad_set.insert(t);
            }
        }

        let mut neighbors = vec![Vec::new(); n];
        for &(a, b) in &edge_set {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        if triads.is_none() {
            for &(a, b) in &edge_set {
                for &c in neighbors[a].iter().filter(|&&c| c > b) {
                    if neighbors[b].binary_search(&c).is_ok() {
                        triad_set.insert([a, b, c]);
                    }
                }
            }
        }
        let triads: Vec<[usize; 3]> = triad_set.into_iter().collect();
        let mut triads_of = vec![Vec::new(); n];
        for (ti, t) in triads.iter().enumerate() {
            for &v in t {
                triads_of[v].push(ti);
            }
        }
        Ok(OrthoGraph {
            vertices: sorted,
            edges: edge_set.into_iter().collect(),
            triads,
            neighbors,
            triads_of,
        })
    }

    /// Abstract graph over labels. Labels in `edges` and `triads` must appear
    /// in `labels`.
    pub fn from_labels(
        labels: &[&str],
        edges: &[(&str, &str)],
        triads: &[[&str; 3]],
    ) -> Result<Self> {
        let index: BTreeMap<&str, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let look = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::InvalidArgument(format!("unknown vertex {l}")))
        };
        let edges = edges
            .iter()
            .map(|&(a, b)| Ok((look(a)?, look(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let triads = triads
            .iter()
            .map(|t| Ok([look(t[0])?, look(t[1])?, look(t[2])?]))
            .collect::<Result<Vec<_>>>()?;
        let vertices = labels.iter().map(|&l| Vertex::labelled(l)).collect();
        OrthoGraph::new(vertices, &edges, Some(&triads))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn triads(&self) -> &[[usize; 3]] {
        &self.triads
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn index_of_ray(&self, ray: &PrimitiveVec3) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| match &v.ray {
                None => std::cmp::Ordering::Less,
                Some(r) => r.cmp(ray),
            })
            .ok()
    }

    /// Connected components over edges, each listed in ascending vertex
    /// order; components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.neighbors[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn sphere_points(&self) -> Result<Vec<SpherePoint>> {
        self.vertices
            .iter()
            .map(|v| {
                let ray = v.ray.clone().ok_or_else(|| {
                    Error::InvalidArgument(format!("vertex {} has no ray", v.label))
                })?;
                SpherePoint::new(ray)
            })
            .collect()
    }
}

/// Orthogonality graph of a ray set: edges where the exact inner product
/// vanishes, triads the mutually orthogonal triples. Duplicate rays collapse.
pub fn build_graph(rays: &[PrimitiveVec3]) -> OrthoGraph {
    let unique: Vec<PrimitiveVec3> = rays
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut edges = Vec::new();
    for i in 0..unique.len() {
        for j in i + 1..unique.len() {
            if dot(&unique[i], &unique[j]).is_zero() {
                edges.push((i, j));
            }
        }
    }
    let vertices = unique.into_iter().map(Vertex::ray).collect();
    OrthoGraph::new(vertices, &edges, None).expect("distinct canonical rays")
}

/// Truth value per vertex, indexed like [`OrthoGraph::vertices`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Valuation(Vec<bool>);

impl Valuation {
    pub fn new(values: Vec<bool>) -> Self {
        Valuation(values)
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, v: usize) -> bool {
        self.0[v]
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Both ends of an edge are true.
    Edge(usize, usize),
    /// A triad without exactly one true vertex.
    Triad { triad: [usize; 3], ones: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValuationCheck {
    pub violations: Vec<Violation>,
}

impl ValuationCheck {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_valuation(g: &OrthoGraph, v: &Valuation) -> Result<ValuationCheck> {
    if v.0.len() != g.vertex_count() {
        return Err(Error::PartialAssignment {
            given: v.0.len(),
            expected: g.vertex_count(),
        });
    }
    let mut violations = Vec::new();
    for &(a, b) in &g.edges {
        if v.0[a] && v.0[b] {
            violations.push(Violation::Edge(a, b));
        }
    }
    for &t in &g.triads {
        let ones = t.iter().filter(|&&i| v.0[i]).count();
        if ones != 1 {
            violations.push(Violation::Triad { triad: t, ones });
        }
    }
    Ok(ValuationCheck { violations })
}

/// The reduced two-coloring by parity of the `axis` coordinate. Every vertex
/// must be a ray meeting the rational unit sphere.
pub fn parity_valuation(g: &OrthoGraph, axis: Axis) -> Result<Valuation> {
    let points = g.sphere_points()?;
    Ok(Valuation(
        points.iter().map(|p| reduced_two_color(p, axis)).collect(),
    ))
}

/// The three-coloring by odd coordinate (colors 0, 1, 2 for `#1`, `#2`,
/// `#3`). Every vertex must be a ray meeting the rational unit sphere.
pub fn parity_coloring(g: &OrthoGraph) -> Result<Vec<usize>> {
    let points = g.sphere_points()?;
    Ok(points
        .iter()
        .map(|p| usize::from(sphere_color(p).index() - 1))
        .collect())
}

/// First valuation in search order, or `None` when the graph admits none.
///
/// Components are solved independently. Within a component, undecided
/// vertices are branched in ascending order with `false` tried before
/// `true`. After each decision, a true vertex forces its neighbors false and
/// a triad with two false vertices forces the third true.
pub fn find_valuation(g: &OrthoGraph) -> Option<Valuation> {
    let mut search = ValuationSearch {
        g,
        values: vec![None; g.vertex_count()],
        trail: Vec::new(),
        queue: Vec::new(),
    };
    for comp in g.components() {
        if !search.solve(&comp, 0) {
            return None;
        }
        search.trail.clear();
    }
    Some(Valuation(
        search
            .values
            .into_iter()
            .map(|v| v.expect("every vertex decided"))
            .collect(),
    ))
}

struct ValuationSearch<'g> {
    g: &'g OrthoGraph,
    values: Vec<Option<bool>>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl ValuationSearch<'_> {
    fn solve(&mut self, order: &[usize], mut pos: usize) -> bool {
        while pos < order.len() && self.values[order[pos]].is_some() {
            pos += 1;
        }
        let Some(&v) = order.get(pos) else {
            return true;
        };
        for value in [false, true] {
            let mark = self.trail.len();
            if self.decide(v, value) && self.solve(order, pos + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn set(&mut self, v: usize, value: bool) {
        self.values[v] = Some(value);
        self.trail.push(v);
        self.queue.push(v);
    }

    fn undo(&mut self, mark: usize) {
        for v in self.trail.drain(mark..) {
            self.values[v] = None;
        }
    }

    /// Assigns `v` and propagates; `false` on conflict.
    fn decide(&mut self, v: usize, value: bool) -> bool {
        self.queue.clear();
        self.set(v, value);
        while let Some(u) = self.queue.pop() {
            if self.values[u] == Some(true) {
                for i in 0..self.g.neighbors[u].len() {
                    let w = self.g.neighbors[u][i];
                    match self.values[w] {
                        Some(true) => return false,
                        Some(false) => {}
                        None => self.set(w, false),
                    }
                }
            } else {
                for i in 0..self.g.triads_of[u].len() {
                    let t = self.g.triads[self.g.triads_of[u][i]];
                    let mut open = None;
                    let mut open_count = 0;
                    let mut ones = 0;
                    for &w in &t {
                        match self.values[w] {
                            Some(true) => ones += 1,
                            Some(false) => {}
                            None => {
                                open = Some(w);
                                open_count += 1;
                            }
                        }
                    }
                    if ones == 0 {
                        match (open_count, open) {
                            (0, _) => return false,
                            (1, Some(w)) => self.set(w, true),
                            _ => {}
                        }
                    }
                }
            }
        }
        true
    }
}

/// Proper coloring with at most `k` colors (values `0..k`), or `None`.
///
/// Exact backtracking per component: the next vertex is the uncolored one
/// with the most distinct neighbor colors (ties: higher degree, then lower
/// index); colors are tried in increasing order and a new color is only
/// opened after all used ones.
pub fn chromatic_coloring(g: &OrthoGraph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if k == 0 {
        return (n == 0).then(Vec::new);
    }
    let mut search = ColoringSearch {
        g,
        k,
        colors: vec![None; n],
    };
    for comp in g.components() {
        if !search.solve(&comp, 0, 0) {
            return None;
        }
    }
    Some(
        search
            .colors
            .into_iter()
            .map(|c| c.expect("colored"))
            .collect(),
    )
}

/// Smallest `k` for which [`chromatic_coloring`] succeeds, with the coloring.
pub fn chromatic_number(g: &OrthoGraph) -> (usize, Vec<usize>) {
    (0..)
        .find_map(|k| chromatic_coloring(g, k).map(|c| (k, c)))
        .expect("n colors always suffice")
}

pub fn is_proper_coloring(g: &OrthoGraph, colors: &[usize]) -> bool {
    colors.len() == g.vertex_count() && g.edges.iter().all(|&(a, b)| colors[a] != colors[b])
}

struct ColoringSearch<'g> {
    g: &'g OrthoGraph,
    k: usize,
    colors: Vec<Option<usize>>,
}

impl ColoringSearch<'_> {
    fn blocked(&self, v: usize) -> u64 {
        self.g.neighbors[v]
            .iter()
            .filter_map(|&w| self.colors[w])
            .fold(0u64, |m, c| m | (1 << c.min(63)))
    }

    fn pick(&self, comp: &[usize]) -> Option<usize> {
        comp.iter()
            .copied()
            .filter(|&v| self.colors[v].is_none())
            .max_by(|&a, &b| {
                let key = |v: usize| (self.blocked(v).count_ones(), self.g.neighbors[v].len());
                key(a).cmp(&key(b)).then(b.cmp(&a))
            })
    }

    fn solve(&mut self, comp: &[usize], colored: usize, used: usize) -> bool {
        if colored == comp.len() {
            return true;
        }
        let v = self.pick(comp).expect("uncolored vertex remains");
        let blocked = self.blocked(v);
        for c in 0..self.k.min(used + 1) {
            if c < 64 && blocked & (1 << c) != 0 {
                continue;
            }
            if c >= 64
                && self.g.neighbors[v]
                    .iter()
                    .any(|&w| self.colors[w] == Some(c))
            {
                continue;
            }
            self.colors[v] = Some(c);
            if self.solve(comp, colored + 1, used.max(c + 1)) {
                return true;
            }
            self.colors[v] = None;
        }
        false
    }
}

/// Parses the graph text format.
///
/// ```text
/// [vertices]
/// a            # bare label
/// 3 4 0        # ray, labelled 3,4,0
/// e 0 0 1      # label and ray
/// [edges]
/// a e
/// [triads]
/// a e 3,4,0
/// ```
///
/// Without an `[edges]` section, a graph whose vertices are all rays gets
/// its edges from exact orthogonality. Without a `[triads]` section, the
/// triads are the triangles of the edge set.
pub fn parse_graph(text: &str) -> Result<OrthoGraph> {
    #[derive(PartialEq, Clone, Copy)]
    enum Section {
        Vertices,
        Edges,
        Triads,
    }
    let mut section = None;
    let mut seen_sections = Vec::new();
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut by_label: BTreeMap<String, usize> = BTreeMap::new();
    let mut by_ray: BTreeMap<PrimitiveVec3, usize> = BTreeMap::new();
    let mut raw_edges: Vec<(usize, Vec<String>)> = Vec::new();
    let mut raw_triads: Vec<(usize, Vec<String>)> = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line = line.split('#').next().unwrap_or("").trim();
        if line.starts_with('[') {
            let s = match line {
                "[vertices]" => Section::Vertices,
                "[edges]" => Section::Edges,
                "[triads]" => Section::Triads,
                _ => return Err(Error::parse(lineno, format!("unknown section {line}"))),
            };
            if seen_sections.contains(&s) {
                return Err(Error::parse(lineno, format!("repeated section {line}")));
            }
            seen_sections.push(s);
            section = Some(s);
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match section {
            None => {
                return Err(Error::parse(
                    lineno,
                    "content before the first section header",
                ));
            }
            Some(Section::Vertices) => {
                let vertex = match tokens.len() {
                    1 => Vertex::labelled(tokens[0]),
                    3 => Vertex::ray(parse_triple(&tokens).map_err(|m| Error::parse(lineno, m))?),
                    4 => Vertex::labelled_ray(
                        tokens[0],
                        parse_triple(&tokens[1..]).map_err(|m| Error::parse(lineno, m))?,
                    ),
                    _ => {
                        return Err(Error::parse(
                            lineno,
                            "vertex lines are `label`, `x y z` or `label x y z`",
                        ))
                    }
                };
                if let Some(&prev) = by_label.get(&vertex.label) {
                    if vertices[prev] == vertex {
                        continue;
                    }
                    return Err(Error::parse(
                        lineno,
                        format!("duplicate label {}", vertex.label),
                    ));
                }
                if let Some(ray) = &vertex.ray {
                    if let Some(&prev) = by_ray.get(ray) {
                        return Err(Error::parse(
                            lineno,
                            format!("ray {ray} already listed as {}", vertices[prev].label),
                        ));
                    }
                    by_ray.insert(ray.clone(), vertices.len());
                }
                by_label.insert(vertex.label.clone(), vertices.len());
                vertices.push(vertex);
            }
            Some(Section::Edges) => {
                if tokens.len() != 2 {
                    return Err(Error::parse(lineno, "edge lines name two vertices"));
                }
                raw_edges.push((lineno, tokens.iter().map(|s| s.to_string()).collect()));
            }
            Some(Section::Triads) => {
                if tokens.len() != 3 {
                    return Err(Error::parse(lineno, "triad lines name three vertices"));
                }
                raw_triads.push((lineno, tokens.iter().map(|s| s.to_string()).collect()));
            }
        }
    }
    if !seen_sections.contains(&Section::Vertices) {
        return Err(Error::parse(
            text.lines().count().max(1),
            "missing [vertices] section",
        ));
    }

    let resolve = |lineno: usize, names: &[String]| -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| {
                by_label
                    .get(n)
                    .copied()
                    .ok_or_else(|| Error::parse(lineno, format!("unknown vertex {n}")))
            })
            .collect()
    };
    let mut edges = Vec::new();
    for (lineno, names) in &raw_edges {
        let e = resolve(*lineno, names)?;
        if e[0] == e[1] {
            return Err(Error::parse(*lineno, format!("self-loop at {}", names[0])));
        }
        edges.push((e[0], e[1]));
    }
    let mut triads = Vec::new();
    for (lineno, names) in &raw_triads {
        let t = resolve(*lineno, names)?;
        if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
            return Err(Error::parse(*lineno, "triad repeats a vertex"));
        }
        triads.push([t[0], t[1], t[2]]);
    }

    let all_rays = !vertices.is_empty() && vertices.iter().all(|v| v.ray.is_some());
    if !seen_sections.contains(&Section::Edges) && all_rays {
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let (Some(a), Some(b)) = (&vertices[i].ray, &vertices[j].ray) else {
                    unreachable!()
                };
                if dot(a, b).is_zero() {
                    edges.push((i, j));
                }
            }
        }
    }
    let triads = seen_sections
        .contains(&Section::Triads)
        .then_some(triads.as_slice());
    OrthoGraph::new(vertices, &edges, triads)
}
