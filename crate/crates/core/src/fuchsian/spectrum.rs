use super::{FuchsianError, FundamentalDomain, PointIndex, Word};
use crate::geometry::{Classification, Mobius};

/// Largest word length accepted by [`length_spectrum`].
pub const MAX_SPECTRUM_WORD: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub length: f64,
    pub word: Word,
    pub element: Mobius,
}

/// Translation lengths `2·acosh(|tr|/2)` of the hyperbolic elements reached by
/// words of length at most `max_word`, deduplicated within `1e-7`, ascending.
/// Each length keeps its shortest witness word.
pub fn length_spectrum(dom: &FundamentalDomain, max_word: usize) -> Result<Vec<SpectrumEntry>, FuchsianError> {
    if max_word > MAX_SPECTRUM_WORD {
        return Err(FuchsianError::WordTooLong { requested: max_word, max: MAX_SPECTRUM_WORD });
    }
    let cap = super::budget_from_env();
    let moves = dom.moves();
    let x = dom.center;
    let mut index = PointIndex::new();
    index.insert(x, 0);
    let mut elements = vec![(Word::identity(), Mobius::IDENTITY)];
    let mut frontier = vec![0usize];
    for _ in 0..max_word {
        let mut next = Vec::new();
        for &i in &frontier {
            for &(letter, m) in &moves {
                let g = elements[i].1.compose(&m);
                let image = g.apply(x);
                if index.find(image, 1e-7).is_some() {
                    continue;
                }
                index.insert(image, elements.len());
                next.push(elements.len());
                elements.push((elements[i].0.pushed(letter), g));
                if elements.len() > cap {
                    return Err(FuchsianError::BudgetExceeded { cap });
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<SpectrumEntry> = elements
        .into_iter()
        .filter(|(_, g)| g.classify() == Classification::Hyperbolic)
        .map(|(word, g)| SpectrumEntry { length: 2.0 * (0.5 * g.trace().abs()).acosh(), word, element: g })
        .collect();
    // stable sort keeps breadth-first order, so the first of a cluster has the shortest word
    out.sort_by(|a, b| a.length.total_cmp(&b.length));
    let mut dedup: Vec<SpectrumEntry> = Vec::new();
    let mut cluster_start = f64::NEG_INFINITY;
    for e in out {
        if e.length - cluster_start <= 1e-7 {
            let last = dedup.last_mut().expect("cluster has a representative");
            if e.word.len() < last.word.len() {
                *last = e;
            }
            continue;
        }
        cluster_start = e.length;
        dedup.push(e);
    }
    Ok(dedup)
}
