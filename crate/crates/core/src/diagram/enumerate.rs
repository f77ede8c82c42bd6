use std::collections::BTreeSet;

use super::canon::CanonicalKey;
use super::jacobi::JacobiDiagram;
use super::{DiagramError, Limits};

/// All isomorphism classes of (unoriented) Jacobi diagrams of degree `k`,
/// including the ones that vanish by AS, sorted by key.
pub fn jacobi_classes(k: usize, limits: &Limits) -> Result<Vec<CanonicalKey>, DiagramError> {
    limits.check(k)?;
    let mut keys = BTreeSet::new();
    for t in 0..=2 * k {
        let u = 2 * k - t;
        if !(u + 3 * t).is_multiple_of(2) {
            continue;
        }
        let n = u + t;
        let mut rem: Vec<u8> = (0..n).map(|v| if v < u { 1 } else { 3 }).collect();
        let mut edges = Vec::with_capacity((u + 3 * t) / 2);
        extend(u, &mut rem, &mut edges, None, &mut keys);
    }
    Ok(keys.into_iter().collect())
}

fn extend(
    u: usize,
    rem: &mut [u8],
    edges: &mut Vec<[usize; 2]>,
    prev: Option<(usize, usize)>,
    keys: &mut BTreeSet<CanonicalKey>,
) {
    let n = rem.len();
    let Some(v) = (0..n).find(|&v| rem[v] > 0) else {
        if let Ok(d) = JacobiDiagram::new(u, n - u, edges.clone(), None) {
            keys.insert(d.canonical_key());
        }
        return;
    };
    let lo = match prev {
        Some((pv, pw)) if pv == v => pw,
        _ => v + 1,
    };
    let fresh = (v + 1..n).find(|&w| w >= u && rem[w] == 3);
    for w in lo..n {
        if rem[w] == 0 {
            continue;
        }
        if w >= u && rem[w] == 3 && Some(w) != fresh {
            continue;
        }
        rem[v] -= 1;
        rem[w] -= 1;
        edges.push([v, w]);
        extend(u, rem, edges, Some((v, w)), keys);
        edges.pop();
        rem[v] += 1;
        rem[w] += 1;
    }
}

/// Class representatives of degree `k`, one per isomorphism class,
/// sorted by key. Classes that vanish by AS are included.
pub fn enumerate_jacobi(
    k: usize,
    connected_only: bool,
    with_univalent_only: bool,
    limits: &Limits,
) -> Result<Vec<JacobiDiagram>, DiagramError> {
    Ok(jacobi_classes(k, limits)?
        .into_iter()
        .map(|key| key.jacobi_representative().expect("valid key"))
        .filter(|d| !connected_only || d.is_connected())
        .filter(|d| {
            !with_univalent_only
                || d.components()
                    .iter()
                    .all(|c| c.iter().any(|&v| d.is_univalent(v)))
        })
        .collect())
}
