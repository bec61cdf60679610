use std::collections::VecDeque;

use super::perm::PermRep;
use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};

/// Default bound on the number of cosets handled by
/// [`reidemeister_schreier`].
pub const DEFAULT_COSET_LIMIT: usize = 100_000;

/// Presentation of the stabilizer of `basepoint` (0-based) under a
/// transitive permutation representation.
///
/// Cosets are the points. The Schreier transversal comes from a
/// breadth-first spanning tree that tries generators in order, forward
/// edges before inverse edges. Schreier generator `s(i, g) = tᵢ g t_{i·g}⁻¹`
/// is named `{g}_{i}` with `i` 1-based; tree edges are dropped. The
/// relators are the rewritten conjugates `tᵢ r tᵢ⁻¹`, skipping those that
/// rewrite to the empty word.
pub fn reidemeister_schreier(
    p: &Presentation,
    rep: &PermRep,
    basepoint: usize,
    coset_limit: usize,
) -> Result<Presentation> {
    let n = rep.degree();
    let m = p.num_generators();
    if rep.images().len() != m {
        return Err(Error::ArityMismatch {
            expected: m,
            found: rep.images().len(),
        });
    }
    if n > coset_limit {
        return Err(Error::CosetLimit {
            degree: n,
            limit: coset_limit,
        });
    }
    if basepoint >= n {
        return Err(Error::InvalidInput(format!(
            "basepoint {} outside 1..={n}",
            basepoint + 1
        )));
    }
    let inverses: Vec<Vec<usize>> = rep.images().iter().map(|g| g.inverse().images().to_vec()).collect();
    let fwd = |i: usize, g: usize| rep.images()[g].apply(i);

    // tree[i * m + g] marks s(i, g) as a tree edge.
    let mut tree = vec![false; n * m];
    let mut seen = vec![false; n];
    seen[basepoint] = true;
    let mut queue = VecDeque::from([basepoint]);
    while let Some(i) = queue.pop_front() {
        for g in 0..m {
            let j = fwd(i, g);
            if !seen[j] {
                seen[j] = true;
                tree[i * m + g] = true;
                queue.push_back(j);
            }
        }
        for g in 0..m {
            let j = inverses[g][i];
            if !seen[j] {
                seen[j] = true;
                tree[j * m + g] = true;
                queue.push_back(j);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotTransitive);
    }

    let mut index = vec![usize::MAX; n * m];
    let mut names = Vec::new();
    for i in 0..n {
        for g in 0..m {
            if !tree[i * m + g] {
                index[i * m + g] = names.len();
                names.push(format!("{}_{}", p.generators()[g], i + 1));
            }
        }
    }

    let mut relators = Vec::new();
    for r in p.relators() {
        for start in 0..n {
            let mut letters = Vec::new();
            let mut j = start;
            for (g, e) in r.unit_letters() {
                if e > 0 {
                    if !tree[j * m + g] {
                        letters.push((index[j * m + g], 1));
                    }
                    j = fwd(j, g);
                } else {
                    j = inverses[g][j];
                    if !tree[j * m + g] {
                        letters.push((index[j * m + g], -1));
                    }
                }
            }
            if j != start {
                return Err(Error::NotHomomorphism {
                    relator: relators.len(),
                });
            }
            let w = Word::from_letters(letters);
            if !w.is_empty() {
                relators.push(w);
            }
        }
    }
    Presentation::new(names, relators)
}
