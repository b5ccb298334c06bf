//! Maximum matching by repeated augmentation, contracting blossoms while
//! searching for each augmenting path.

use crate::assembly::{search_match_blossom, BlossomResult};
use crate::certificate::{Certificate, ContractionStep};
use crate::contraction::{refine, ContractionMap};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path};
use crate::matching::{augment, Matching};
use crate::search::{build_odd_set_cover, SearchObserver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AugSearch {
    Found(Path),
    /// No augmenting path exists. The certificate proves it for the
    /// matching the search started from.
    Exhausted {
        certificate: Certificate,
        quotient_graph: Graph,
        quotient_matching: Matching,
    },
}

struct Level {
    graph: Graph,
    matching: Matching,
    map: ContractionMap,
    cycle: Path,
}

pub fn find_aug_path(g: &Graph, m: &Matching) -> Result<Option<Path>> {
    Ok(match search_aug_path(g, m, &mut ())?.0 {
        AugSearch::Found(p) => Some(p),
        AugSearch::Exhausted { .. } => None,
    })
}

/// Searches for an augmenting path, contracting each blossom met and
/// searching the quotient again. A path found at some depth is lifted back
/// level by level. Also returns the number of contractions performed.
pub fn search_aug_path<O>(g: &Graph, m: &Matching, observer: &mut O) -> Result<(AugSearch, usize)>
where
    O: SearchObserver + ?Sized,
{
    let bound = g.vertices().len();
    let mut levels: Vec<Level> = Vec::new();
    let mut contractions = Vec::new();
    let mut graph = g.clone();
    let mut matching = m.clone();

    loop {
        match search_match_blossom(&graph, &matching, observer)? {
            BlossomResult::AugmentingPath(mut p) => {
                let depth = levels.len();
                for level in levels.iter().rev() {
                    p = refine(&level.graph, &level.map, &level.cycle, &level.matching, &p)?;
                }
                return Ok((AugSearch::Found(p), depth));
            }
            BlossomResult::FoundBlossom(b) => {
                if levels.len() + 1 > bound {
                    return Err(Error::DepthExceeded { depth: levels.len() + 1, vertices: bound });
                }
                let map = ContractionMap::for_cycle(&graph, &b.cycle);
                observer.blossom_contracted(&b.stem, &b.cycle, map.target());
                contractions.push(ContractionStep {
                    stem: b.stem.clone(),
                    cycle: b.cycle.clone(),
                    target: map.target(),
                });
                let next_graph = map.quotient_graph(&graph);
                let next_matching = map.quotient_matching(&matching)?;
                levels.push(Level {
                    graph: std::mem::replace(&mut graph, next_graph),
                    matching: std::mem::replace(&mut matching, next_matching),
                    map,
                    cycle: b.cycle,
                });
            }
            BlossomResult::NotFound(state) => {
                let cover = build_odd_set_cover(&graph, &matching, &state)?;
                let depth = levels.len();
                let found = AugSearch::Exhausted {
                    certificate: Certificate { contractions, cover },
                    quotient_graph: graph,
                    quotient_matching: matching,
                };
                return Ok((found, depth));
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub matching: Matching,
    /// Proof that `matching` is maximum.
    pub certificate: Certificate,
    pub augmentations: usize,
    /// Deepest contraction nesting reached by any single search.
    pub max_depth: usize,
}

pub fn find_max_matching(g: &Graph) -> Result<Matching> {
    Ok(solve(g, &mut ())?.matching)
}

/// Augments from the empty matching until the search fails.
pub fn solve<O>(g: &Graph, observer: &mut O) -> Result<Solution>
where
    O: SearchObserver + ?Sized,
{
    let mut m = Matching::default();
    let mut augmentations = 0;
    let mut max_depth = 0;
    loop {
        let (found, depth) = search_aug_path(g, &m, observer)?;
        max_depth = max_depth.max(depth);
        match found {
            AugSearch::Found(p) => {
                m = augment(&m, &p)?;
                augmentations += 1;
            }
            AugSearch::Exhausted { certificate, .. } => {
                return Ok(Solution { matching: m, certificate, augmentations, max_depth });
            }
        }
    }
}
