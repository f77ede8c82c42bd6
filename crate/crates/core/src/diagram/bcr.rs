use std::collections::HashSet;
use std::fmt;

use super::canon::{CanonicalKey, TAG_BCR};
use super::{DiagramError, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    Internal,
    External,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    Internal,
    External,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BcrEdge {
    pub from: usize,
    pub to: usize,
    pub class: EdgeClass,
}

/// Raw directed graph with vertex and edge classes, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BcrGraph {
    pub vertices: Vec<VertexClass>,
    pub edges: Vec<BcrEdge>,
}

impl BcrGraph {
    pub fn add_vertex(&mut self, c: VertexClass) -> usize {
        self.vertices.push(c);
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize, class: EdgeClass) -> usize {
        self.edges.push(BcrEdge { from, to, class });
        self.edges.len() - 1
    }
}

/// The five admissible vertex neighbourhoods.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexType {
    /// External; two incoming external edges (one from a univalent vertex), one outgoing external edge.
    ExternalTrivalent,
    /// Internal; incoming internal edge and external leg, outgoing internal edge.
    InternalTrivalent,
    /// Internal; a single outgoing external edge.
    Univalent,
    /// Internal; incoming external edge, outgoing internal edge.
    EnterInternal,
    /// Internal; incoming internal edge, outgoing external edge.
    LeaveInternal,
}

impl VertexType {
    pub fn number(self) -> u8 {
        match self {
            VertexType::ExternalTrivalent => 1,
            VertexType::InternalTrivalent => 2,
            VertexType::Univalent => 3,
            VertexType::EnterInternal => 4,
            VertexType::LeaveInternal => 5,
        }
    }
}

/// A vertex of the cycle, read in the direction of the cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    External,
    Internal,
    Enter,
    Leave,
}

impl Piece {
    fn code(self) -> u16 {
        match self {
            Piece::External => 0,
            Piece::Internal => 1,
            Piece::Enter => 2,
            Piece::Leave => 3,
        }
    }

    fn from_code(c: u16) -> Piece {
        match c {
            0 => Piece::External,
            1 => Piece::Internal,
            2 => Piece::Enter,
            _ => Piece::Leave,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Piece::External => 'E',
            Piece::Internal => 'I',
            Piece::Enter => '(',
            Piece::Leave => ')',
        }
    }

    pub fn from_char(c: char) -> Option<Piece> {
        Some(match c {
            'E' => Piece::External,
            'I' => Piece::Internal,
            '(' => Piece::Enter,
            ')' => Piece::Leave,
            _ => return None,
        })
    }

    fn in_class(self) -> EdgeClass {
        match self {
            Piece::External | Piece::Enter => EdgeClass::External,
            Piece::Internal | Piece::Leave => EdgeClass::Internal,
        }
    }

    fn out_class(self) -> EdgeClass {
        match self {
            Piece::External | Piece::Leave => EdgeClass::External,
            Piece::Internal | Piece::Enter => EdgeClass::Internal,
        }
    }

    fn has_leg(self) -> bool {
        matches!(self, Piece::External | Piece::Internal)
    }

    /// Number of graph vertices the piece contributes, leg included.
    fn weight(self) -> usize {
        if self.has_leg() {
            2
        } else {
            1
        }
    }
}

pub(crate) fn piece_weight(code: u16) -> usize {
    Piece::from_code(code).weight()
}

pub(crate) fn piece_char(code: u16) -> char {
    Piece::from_code(code).as_char()
}

/// A validated BCR diagram: one directed cycle with legs attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcrDiagram {
    graph: BcrGraph,
    types: Vec<VertexType>,
    cycle: Vec<usize>,
    cycle_edges: Vec<usize>,
    /// For trivalent vertices: (univalent source, leg edge).
    legs: Vec<Option<(usize, usize)>>,
    word: Vec<Piece>,
}

/// Checks the local vertex conditions and the global cycle structure.
pub fn validate_bcr(g: BcrGraph) -> Result<BcrDiagram, DiagramError> {
    let n = g.vertices.len();
    if n == 0 {
        return Err(DiagramError::EmptyGraph);
    }
    let mut seen = HashSet::new();
    for (i, e) in g.edges.iter().enumerate() {
        for v in [e.from, e.to] {
            if v >= n {
                return Err(DiagramError::VertexOutOfRange { edge: i, vertex: v });
            }
        }
        if e.from == e.to {
            return Err(DiagramError::LoopEdge(i));
        }
        if !seen.insert((e.from, e.to)) {
            return Err(DiagramError::DuplicateEdge(i));
        }
    }
    let mut ins: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut outs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in g.edges.iter().enumerate() {
        outs[e.from].push(i);
        ins[e.to].push(i);
    }
    {
        let mut comp = vec![0usize];
        let mut mark = vec![false; n];
        mark[0] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for &e in outs[v].iter().chain(&ins[v]) {
                for w in [g.edges[e].from, g.edges[e].to] {
                    if !mark[w] {
                        mark[w] = true;
                        comp.push(w);
                    }
                }
            }
            i += 1;
        }
        if comp.len() != n {
            return Err(DiagramError::Disconnected);
        }
    }
    let is_uni = |v: usize| {
        g.vertices[v] == VertexClass::Internal
            && ins[v].is_empty()
            && outs[v].len() == 1
            && g.edges[outs[v][0]].class == EdgeClass::External
    };
    let mut types = Vec::with_capacity(n);
    let mut legs = vec![None; n];
    for v in 0..n {
        if is_uni(v) {
            types.push(VertexType::Univalent);
            continue;
        }
        let cls =
            |es: &[usize], c: EdgeClass| es.iter().filter(|&&e| g.edges[e].class == c).count();
        let (ie, ii) = (
            cls(&ins[v], EdgeClass::External),
            cls(&ins[v], EdgeClass::Internal),
        );
        let (oe, oi) = (
            cls(&outs[v], EdgeClass::External),
            cls(&outs[v], EdgeClass::Internal),
        );
        let from_uni: Vec<usize> = ins[v]
            .iter()
            .copied()
            .filter(|&e| g.edges[e].class == EdgeClass::External && is_uni(g.edges[e].from))
            .collect();
        let t = match (g.vertices[v], ie, ii, oe, oi) {
            (VertexClass::External, 2, 0, 1, 0) if from_uni.len() == 1 => {
                VertexType::ExternalTrivalent
            }
            (VertexClass::Internal, 1, 1, 0, 1) if from_uni.len() == 1 => {
                VertexType::InternalTrivalent
            }
            (VertexClass::Internal, 1, 0, 0, 1) => VertexType::EnterInternal,
            (VertexClass::Internal, 0, 1, 1, 0) => VertexType::LeaveInternal,
            _ => return Err(DiagramError::VertexTypeViolation(v)),
        };
        if matches!(
            t,
            VertexType::ExternalTrivalent | VertexType::InternalTrivalent
        ) {
            let e = from_uni[0];
            legs[v] = Some((g.edges[e].from, e));
        }
        types.push(t);
    }
    // Every univalent vertex must feed a trivalent one.
    for (v, t) in types.iter().enumerate() {
        if *t == VertexType::Univalent {
            let w = g.edges[outs[v][0]].to;
            if legs[w].map(|l| l.0) != Some(v) {
                return Err(DiagramError::VertexTypeViolation(v));
            }
        }
    }
    let start = (0..n)
        .find(|&v| types[v] != VertexType::Univalent)
        .ok_or_else(|| DiagramError::CycleStructureViolation("no cycle vertex".into()))?;
    let on_cycle = types
        .iter()
        .filter(|&&t| t != VertexType::Univalent)
        .count();
    let mut cycle = Vec::new();
    let mut cycle_edges = Vec::new();
    let mut v = start;
    loop {
        cycle.push(v);
        let e = outs[v][0];
        cycle_edges.push(e);
        v = g.edges[e].to;
        if v == start {
            break;
        }
        if cycle.len() > on_cycle || types[v] == VertexType::Univalent {
            return Err(DiagramError::CycleStructureViolation(
                "walk does not close".into(),
            ));
        }
    }
    if cycle.len() != on_cycle {
        return Err(DiagramError::CycleStructureViolation(format!(
            "cycle covers {} of {} vertices",
            cycle.len(),
            on_cycle
        )));
    }
    let word = cycle
        .iter()
        .map(|&v| match types[v] {
            VertexType::ExternalTrivalent => Piece::External,
            VertexType::InternalTrivalent => Piece::Internal,
            VertexType::EnterInternal => Piece::Enter,
            VertexType::LeaveInternal => Piece::Leave,
            VertexType::Univalent => unreachable!(),
        })
        .collect();
    Ok(BcrDiagram {
        graph: g,
        types,
        cycle,
        cycle_edges,
        legs,
        word,
    })
}

fn word_is_valid(w: &[Piece]) -> bool {
    w.len() >= 2 && (0..w.len()).all(|i| w[i].out_class() == w[(i + 1) % w.len()].in_class())
}

fn min_rotation(w: &[Piece]) -> Vec<Piece> {
    (0..w.len())
        .map(|r| w[r..].iter().chain(&w[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

impl BcrDiagram {
    /// Builds the diagram whose cycle reads `word`. Legs are added after
    /// the cycle vertices.
    pub fn from_word(word: &[Piece]) -> Result<BcrDiagram, DiagramError> {
        if !word_is_valid(word) {
            return Err(DiagramError::CycleStructureViolation(format!(
                "inadmissible word {}",
                word.iter().map(|p| p.as_char()).collect::<String>()
            )));
        }
        let mut g = BcrGraph::default();
        let l = word.len();
        for p in word {
            g.add_vertex(if *p == Piece::External {
                VertexClass::External
            } else {
                VertexClass::Internal
            });
        }
        for (i, p) in word.iter().enumerate() {
            g.add_edge(i, (i + 1) % l, p.out_class());
        }
        for (i, p) in word.iter().enumerate() {
            if p.has_leg() {
                let u = g.add_vertex(VertexClass::Internal);
                g.add_edge(u, i, EdgeClass::External);
            }
        }
        validate_bcr(g)
    }

    pub fn parse_word(s: &str) -> Result<BcrDiagram, DiagramError> {
        let w: Option<Vec<Piece>> = s.chars().map(Piece::from_char).collect();
        match w {
            Some(w) => BcrDiagram::from_word(&w),
            None => Err(DiagramError::Format(format!("unknown piece in {s:?}"))),
        }
    }

    /// Cycle of `k` external trivalent vertices, each with its leg.
    pub fn wheel(k: usize) -> BcrDiagram {
        BcrDiagram::from_word(&vec![Piece::External; k]).expect("valid wheel")
    }

    pub fn graph(&self) -> &BcrGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertices.len()
    }

    pub fn degree(&self) -> usize {
        self.vertex_count() / 2
    }

    pub fn vertex_type(&self, v: usize) -> VertexType {
        self.types[v]
    }

    pub fn types(&self) -> &[VertexType] {
        &self.types
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn cycle_edges(&self) -> &[usize] {
        &self.cycle_edges
    }

    /// Leg `(source, edge)` of a trivalent vertex.
    pub fn leg(&self, v: usize) -> Option<(usize, usize)> {
        self.legs[v]
    }

    pub fn word(&self) -> &[Piece] {
        &self.word
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|p| p.as_char()).collect()
    }

    pub fn is_internal_vertex(&self, v: usize) -> bool {
        self.graph.vertices[v] == VertexClass::Internal
    }

    pub fn internal_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.is_internal_vertex(v))
            .collect()
    }

    pub fn external_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| !self.is_internal_vertex(v))
            .collect()
    }

    pub fn edges_of(&self, class: EdgeClass) -> Vec<usize> {
        (0..self.graph.edges.len())
            .filter(|&e| self.graph.edges[e].class == class)
            .collect()
    }

    pub fn edge(&self, e: usize) -> BcrEdge {
        self.graph.edges[e]
    }

    /// Number of vertices of type 1 or 2.
    pub fn trivalent_count(&self) -> usize {
        self.legs.iter().filter(|l| l.is_some()).count()
    }

    /// Out edge of vertex `v`. Every vertex has exactly one.
    pub fn out_edge(&self, v: usize) -> usize {
        self.graph
            .edges
            .iter()
            .position(|e| e.from == v)
            .expect("out edge")
    }

    /// Incoming edge of `v` that lies on the cycle.
    pub fn cycle_in_edge(&self, v: usize) -> usize {
        let i = self
            .cycle
            .iter()
            .position(|&c| c == v)
            .expect("cycle vertex");
        let l = self.cycle.len();
        self.cycle_edges[(i + l - 1) % l]
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        let mut k = vec![TAG_BCR];
        k.extend(min_rotation(&self.word).iter().map(|p| p.code()));
        CanonicalKey(k)
    }

    /// Order of the automorphism group, i.e. of the rotational symmetry of the cycle word.
    pub fn automorphism_count(&self) -> usize {
        let l = self.word.len();
        (0..l)
            .filter(|&r| (0..l).all(|i| self.word[i] == self.word[(i + r) % l]))
            .count()
    }
}

impl fmt::Display for BcrDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

/// One diagram per isomorphism class of degree `k`, sorted by key.
pub fn enumerate_bcr(k: usize, limits: &Limits) -> Result<Vec<BcrDiagram>, DiagramError> {
    limits.check(k)?;
    let mut out = Vec::new();
    let mut word = Vec::new();
    grow(&mut word, 0, 2 * k, &mut out);
    let mut ds: Vec<BcrDiagram> = out
        .into_iter()
        .map(|w| BcrDiagram::from_word(&w).expect("grammar words are valid"))
        .collect();
    ds.sort_by_key(|d| d.canonical_key());
    Ok(ds)
}

fn grow(word: &mut Vec<Piece>, weight: usize, target: usize, out: &mut Vec<Vec<Piece>>) {
    if weight == target {
        if word_is_valid(word) && min_rotation(word) == *word {
            out.push(word.clone());
        }
        return;
    }
    for p in [Piece::External, Piece::Internal, Piece::Enter, Piece::Leave] {
        if weight + p.weight() > target {
            continue;
        }
        if let Some(last) = word.last() {
            if last.out_class() != p.in_class() {
                continue;
            }
        }
        word.push(p);
        grow(word, weight + p.weight(), target, out);
        word.pop();
    }
}
