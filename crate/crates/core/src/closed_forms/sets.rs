//! Minimum total mixed dominating sets and maximum mixed independent sets.
//! Indices are 1-based; on cycles they wrap into `1..=n`.

use super::Family;
use crate::error::Result;
use crate::graph::ObjectId;

struct Idx {
    n: usize,
    wrap: bool,
}

impl Idx {
    fn at(&self, i: usize) -> usize {
        if self.wrap {
            (i - 1) % self.n + 1
        } else {
            i
        }
    }

    fn v(&self, i: usize) -> ObjectId {
        ObjectId::Vertex(self.at(i))
    }

    fn e(&self, i: usize, j: usize) -> ObjectId {
        ObjectId::edge(self.at(i), self.at(j))
    }
}

/// Blocks `{v_{7i+2}, v_{7i+3}, e_{(7i+5)(7i+6)}, e_{(7i+6)(7i+7)}}` for every full
/// block of seven.
fn s0(x: &Idx) -> Vec<ObjectId> {
    let mut s = Vec::new();
    for i in 0..x.n / 7 {
        let b = 7 * i;
        s.extend([x.v(b + 2), x.v(b + 3), x.e(b + 5, b + 6), x.e(b + 6, b + 7)]);
    }
    s
}

fn tail(x: &Idx, family: Family) -> Vec<ObjectId> {
    let n = x.n;
    match (n % 7, family) {
        (0, _) => vec![],
        (1, _) => vec![x.e(n - 1, n)],
        (2 | 3, _) => vec![x.v(n - 1), x.v(n)],
        (4, Family::Cycle) => vec![x.v(n - 2), x.v(n - 1), x.v(n)],
        (4, Family::Path) => vec![x.v(n - 2), x.v(n - 1)],
        (5, Family::Cycle) => vec![x.v(n - 3), x.v(n - 2), x.v(n - 1), x.v(n)],
        (5, Family::Path) => vec![x.v(n - 3), x.v(n - 2), x.v(n - 1)],
        _ => vec![x.v(n - 4), x.v(n - 3), x.e(n - 2, n - 1), x.e(n - 1, n)],
    }
}

pub fn min_tmds_cycle(n: usize) -> Result<Vec<ObjectId>> {
    min_tmds(Family::Cycle, n)
}

pub fn min_tmds_path(n: usize) -> Result<Vec<ObjectId>> {
    min_tmds(Family::Path, n)
}

/// A total mixed dominating set of size `γ_tm`, sorted in object order.
pub fn min_tmds(family: Family, n: usize) -> Result<Vec<ObjectId>> {
    family.check(n)?;
    let x = Idx {
        n,
        wrap: family == Family::Cycle,
    };
    let mut s = s0(&x);
    s.extend(tail(&x, family));
    s.sort_unstable();
    Ok(s)
}

/// A mixed independent set of size `α_mix`, sorted in object order.
pub fn max_mixed_independent_set(family: Family, n: usize) -> Result<Vec<ObjectId>> {
    family.check(n)?;
    let mut s = Vec::new();
    match family {
        Family::Cycle => {
            let vertices = if n % 3 == 2 { n.div_ceil(3) } else { n / 3 };
            for i in 1..=vertices {
                s.push(ObjectId::Vertex(3 * i - 2));
            }
            for i in 1..=n / 3 {
                s.push(ObjectId::edge(3 * i - 1, 3 * i));
            }
        }
        Family::Path => {
            for i in 0..n.div_ceil(3) {
                s.push(ObjectId::Vertex(3 * i + 1));
            }
            for i in 0..n / 3 {
                s.push(ObjectId::edge(3 * i + 2, 3 * i + 3));
            }
        }
    }
    s.sort_unstable();
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(labels: &[&str]) -> Vec<ObjectId> {
        let mut v: Vec<ObjectId> = labels.iter().map(|s| s.parse().unwrap()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn tmds_examples() {
        assert_eq!(min_tmds_cycle(7).unwrap(), ids(&["v2", "v3", "e5_6", "e6_7"]));
        assert_eq!(min_tmds_cycle(8).unwrap(), ids(&["v2", "v3", "e5_6", "e6_7", "e7_8"]));
        assert_eq!(min_tmds_path(4).unwrap(), ids(&["v2", "v3"]));
        assert_eq!(min_tmds_path(2).unwrap(), ids(&["v1", "v2"]));
        assert!(min_tmds_path(1).is_err());
    }

    #[test]
    fn independent_set_examples() {
        assert_eq!(
            max_mixed_independent_set(Family::Cycle, 6).unwrap(),
            ids(&["v1", "e2_3", "v4", "e5_6"])
        );
        assert_eq!(max_mixed_independent_set(Family::Path, 3).unwrap(), ids(&["v1", "e2_3"]));
        assert_eq!(max_mixed_independent_set(Family::Path, 4).unwrap(), ids(&["v1", "e2_3", "v4"]));
    }
}
