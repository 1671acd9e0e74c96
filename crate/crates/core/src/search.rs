//! Exhaustive enumeration of burning sequences.
//!
//! The search is a depth-first walk over source choices, each level trying
//! candidates in ascending id order. The regions are grown incrementally:
//! `N_j = U_j ∪ {v_j}` and `U_{j+1} = N_1(N_j)`. A sequence is emitted as soon
//! as `U_{j+1}` covers the graph; at that point no unreached vertex remains,
//! so emitted sequences never extend one another and the emission order is
//! lexicographic.

use rayon::prelude::*;

use crate::bitset::SlotSet;
use crate::burning::Burning;
use crate::graph::{Graph, VertexId};

/// Knobs for [`Burnings`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Longest sequence considered; defaults to `|V|`.
    pub max_sources: Option<usize>,
    /// Emit only burnings whose burning map is a homomorphism.
    pub homomorphisms_only: bool,
    /// In homomorphism mode, cut branches that cannot produce a homomorphism
    /// (sources closer than 3, or two adjacent vertices already fixed to the
    /// same time). Never changes the emitted set.
    pub prune: bool,
    /// Restrict the first source, for partitioning the search.
    pub first_source: Option<VertexId>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_sources: None,
            homomorphisms_only: false,
            prune: true,
            first_source: None,
        }
    }
}

impl SearchOptions {
    pub fn burnings() -> Self {
        Self::default()
    }

    pub fn homomorphisms() -> Self {
        SearchOptions {
            homomorphisms_only: true,
            ..Self::default()
        }
    }

    pub fn max_sources(mut self, cap: usize) -> Self {
        self.max_sources = Some(cap);
        self
    }

    pub fn prune(mut self, on: bool) -> Self {
        self.prune = on;
        self
    }

    pub fn first_source(mut self, v: VertexId) -> Self {
        self.first_source = Some(v);
        self
    }
}

/// Every burning of `g` with at most `max_sources` sources, in lexicographic
/// order of source sequences.
pub fn enumerate_burnings(g: &Graph, max_sources: Option<usize>) -> Burnings {
    Burnings::new(
        g,
        SearchOptions {
            max_sources,
            ..SearchOptions::burnings()
        },
    )
}

/// Every burning of `g` whose burning map is a homomorphism.
pub fn enumerate_homomorphisms(g: &Graph) -> Burnings {
    Burnings::new(g, SearchOptions::homomorphisms())
}

/// Runs the search split by first source on the rayon pool and merges the
/// parts back into lexicographic order.
pub fn collect_parallel(g: &Graph, options: SearchOptions) -> Vec<Burning> {
    let firsts: Vec<VertexId> = match options.first_source {
        Some(v) => vec![v],
        None => g.vertices().to_vec(),
    };
    let mut parts: Vec<(VertexId, Vec<Burning>)> = firsts
        .into_par_iter()
        .map(|v| (v, Burnings::new(g, options.first_source(v)).collect()))
        .collect();
    parts.sort_by_key(|(v, _)| *v);
    parts.into_iter().flat_map(|(_, part)| part).collect()
}

struct Frame {
    reached: SlotSet,
    // slots whose time was fixed at this depth
    assigned: Vec<usize>,
    best: Vec<u32>,
}

/// Lazy depth-first enumerator; see [`SearchOptions`].
pub struct Burnings {
    graph: Graph,
    options: SearchOptions,
    cap: usize,
    n: usize,
    balls1: Vec<SlotSet>,
    balls2: Vec<SlotSet>,
    // dist[a][b], u32::MAX when unreachable
    dist: Vec<Vec<u32>>,
    // largest |N_r(v)| over v, indexed by r
    max_ball: Vec<usize>,
    times: Vec<u32>,
    sources: Vec<usize>,
    frames: Vec<Frame>,
    cursors: Vec<usize>,
    first_slot: Option<usize>,
}

impl Burnings {
    pub fn new(g: &Graph, options: SearchOptions) -> Burnings {
        let n = g.vertex_count();
        let cap = options.max_sources.unwrap_or(n).min(n);
        let dist: Vec<Vec<u32>> = (0..n)
            .map(|s| {
                g.slot_distances(s)
                    .into_iter()
                    .map(|d| d.map_or(u32::MAX, |d| d as u32))
                    .collect()
            })
            .collect();
        let ball = |r: u32| -> Vec<SlotSet> {
            (0..n)
                .map(|s| {
                    let mut set = SlotSet::empty(n);
                    for (t, &d) in dist[s].iter().enumerate() {
                        if d <= r {
                            set.insert(t);
                        }
                    }
                    set
                })
                .collect()
        };
        let max_ball = (0..=cap + 1)
            .map(|r| {
                dist.iter()
                    .map(|row| row.iter().filter(|&&d| d as usize <= r).count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let first_slot = options.first_source.map(|v| g.slot(v).unwrap_or(usize::MAX));
        let cursors = if n == 0 || cap == 0 { Vec::new() } else { vec![0] };
        Burnings {
            graph: g.clone(),
            options,
            cap,
            n,
            balls1: ball(1),
            balls2: ball(2),
            dist,
            max_ball,
            times: vec![0; n],
            sources: Vec::new(),
            frames: Vec::new(),
            cursors,
            first_slot,
        }
    }

    fn hom_pruning(&self) -> bool {
        self.options.homomorphisms_only && self.options.prune
    }

    fn is_candidate(&self, depth: usize, slot: usize) -> bool {
        if let Some(reached) = self.frames.last().map(|f| &f.reached) {
            if reached.contains(slot) {
                return false;
            }
        }
        if depth == 0 {
            if let Some(first) = self.first_slot {
                return slot == first;
            }
        }
        if self.hom_pruning() {
            // homomorphism sources sit pairwise at distance >= 3
            return self.sources.iter().all(|&s| !self.balls2[s].contains(slot));
        }
        true
    }

    fn undo(&mut self, assigned: &[usize]) {
        for &s in assigned {
            self.times[s] = 0;
        }
    }

    /// Lights `slot` as source `depth + 1`. Returns the new frame, or `None`
    /// when the branch is cut (its assignments already undone).
    fn extend(&mut self, depth: usize, slot: usize) -> Option<Frame> {
        let time = depth as u32 + 1;
        let mut burned = match self.frames.last() {
            Some(f) => f.reached.clone(),
            None => SlotSet::empty(self.n),
        };
        burned.insert(slot);
        let mut reached = burned.clone();
        for x in burned.iter() {
            reached.union_with(&self.balls1[x]);
        }
        let mut assigned = vec![slot];
        self.times[slot] = time;
        for x in reached.iter() {
            if self.times[x] == 0 {
                self.times[x] = time + 1;
                assigned.push(x);
            }
        }
        if self.hom_pruning() {
            let clash = assigned.iter().any(|&x| {
                self.graph
                    .adjacent_slots(x)
                    .iter()
                    .any(|&y| self.times[y] == self.times[x])
            });
            if clash {
                self.undo(&assigned);
                return None;
            }
        }
        let best = if self.options.max_sources.is_some() {
            let prev = self.frames.last().map(|f| f.best.as_slice());
            (0..self.n)
                .map(|x| {
                    let here = time.saturating_add(self.dist[slot][x]);
                    prev.map_or(here, |p| p[x].min(here))
                })
                .collect()
        } else {
            Vec::new()
        };
        Some(Frame {
            reached,
            assigned,
            best,
        })
    }

    /// Whether sources `depth+2..=cap` can still cover everything the current
    /// sources cannot reach by time `cap + 1`.
    fn coverable(&self, frame: &Frame, depth: usize) -> bool {
        if self.options.max_sources.is_none() {
            return true;
        }
        let limit = self.cap as u32 + 1;
        let missing = frame.best.iter().filter(|&&b| b > limit).count();
        if missing == 0 {
            return true;
        }
        let capacity: usize = (depth + 2..=self.cap)
            .map(|i| self.max_ball[self.cap + 1 - i])
            .sum();
        missing <= capacity
    }

    fn emit(&self) -> Burning {
        let sources = self.sources.iter().map(|&s| self.graph.id(s)).collect();
        Burning::from_parts(self.graph.clone(), sources, self.times.clone())
    }
}

impl Iterator for Burnings {
    type Item = Burning;

    fn next(&mut self) -> Option<Burning> {
        loop {
            let depth = self.frames.len();
            let start = *self.cursors.last()?;
            let candidate = (start..self.n).find(|&s| self.is_candidate(depth, s));
            let Some(slot) = candidate else {
                self.cursors.pop();
                if let Some(frame) = self.frames.pop() {
                    self.undo(&frame.assigned);
                    self.sources.pop();
                }
                continue;
            };
            self.cursors[depth] = slot + 1;
            let Some(frame) = self.extend(depth, slot) else {
                continue;
            };
            self.sources.push(slot);
            if frame.reached.len() == self.n {
                let burning = self.emit();
                let out = if self.options.homomorphisms_only && !self.options.prune {
                    burning.is_homomorphism().then_some(burning)
                } else {
                    debug_assert!(!self.hom_pruning() || burning.is_homomorphism());
                    Some(burning)
                };
                self.sources.pop();
                self.undo(&frame.assigned);
                if out.is_some() {
                    return out;
                }
                continue;
            }
            if depth + 1 >= self.cap || !self.coverable(&frame, depth) {
                self.sources.pop();
                self.undo(&frame.assigned);
                continue;
            }
            self.frames.push(frame);
            self.cursors.push(0);
        }
    }
}
