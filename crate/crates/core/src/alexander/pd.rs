use std::collections::HashMap;
use std::fmt;

use super::AlexanderError;

/// A crossing `(a, b, c, d)`: `a` is the incoming under-strand and the other
/// labels follow counterclockwise, so `c` is the outgoing under-strand.
pub type Crossing = [u32; 4];

/// A planar diagram code of a knot: crossings with their signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<Crossing>,
    signs: Vec<i8>,
}

impl PdCode {
    /// The crossingless diagram.
    pub fn unknot() -> PdCode {
        PdCode {
            crossings: Vec::new(),
            signs: Vec::new(),
        }
    }

    /// Validates the labels and the orientation, and computes the signs.
    pub fn new(crossings: Vec<Crossing>) -> Result<PdCode, AlexanderError> {
        let signs = traverse(&crossings)?;
        Ok(PdCode { crossings, signs })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// `+1` when the over-strand runs from `d` to `b`, `-1` otherwise.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// The mirror image: every crossing switched.
    pub fn mirror(&self) -> PdCode {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], &s)| if s > 0 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        PdCode::new(crossings).expect("mirror of a valid code")
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for [a, b, c, d] in &self.crossings {
            writeln!(f, "X({a},{b},{c},{d})")?;
        }
        Ok(())
    }
}

/// Walks the knot from the first crossing and returns the crossing signs.
fn traverse(crossings: &[Crossing]) -> Result<Vec<i8>, AlexanderError> {
    if crossings.is_empty() {
        return Ok(Vec::new());
    }
    let mut seen: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (x, c) in crossings.iter().enumerate() {
        for (s, &l) in c.iter().enumerate() {
            seen.entry(l).or_default().push((x, s));
        }
    }
    let mut labels: Vec<&u32> = seen.keys().collect();
    labels.sort();
    for l in labels {
        if seen[l].len() != 2 {
            return Err(AlexanderError::ArcCount {
                label: *l,
                count: seen[l].len(),
            });
        }
    }
    let mut signs = vec![0i8; crossings.len()];
    let mut entered = 0;
    let (mut x, mut s) = (0usize, 0usize);
    loop {
        match s {
            0 => {}
            1 => signs[x] = -1,
            3 => signs[x] = 1,
            _ => return Err(AlexanderError::Orientation(x)),
        }
        entered += 1;
        let out = (s + 2) % 4;
        let label = crossings[x][out];
        let &(nx, ns) = seen[&label]
            .iter()
            .find(|&&o| o != (x, out))
            .expect("two occurrences");
        (x, s) = (nx, ns);
        if (x, s) == (0, 0) {
            break;
        }
        if entered > 2 * crossings.len() {
            return Err(AlexanderError::Orientation(x));
        }
    }
    if entered != 2 * crossings.len() || signs.contains(&0) {
        return Err(AlexanderError::MultiComponent);
    }
    Ok(signs)
}

/// Parses one crossing `X(a,b,c,d)` (square brackets also accepted) per
/// line. Blank lines and `#` comments are skipped.
pub fn parse_pd(text: &str) -> Result<PdCode, AlexanderError> {
    let mut crossings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| AlexanderError::Parse {
            line: i + 1,
            message: msg.to_string(),
        };
        let body = line
            .strip_prefix("X(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| line.strip_prefix("X[").and_then(|r| r.strip_suffix(']')))
            .ok_or_else(|| bad("expected X(a,b,c,d)"))?;
        let nums: Vec<u32> = body
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad("labels must be non-negative integers"))?;
        let c: Crossing = nums
            .try_into()
            .map_err(|_| bad("a crossing has four labels"))?;
        crossings.push(c);
    }
    PdCode::new(crossings)
}
