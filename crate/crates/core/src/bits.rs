//! Bitmask helpers for exhaustive searches on graphs with at most 64
//! vertices.

/// Iterates the set bits of `mask`, lowest first.
pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn to_vec(mask: u64) -> Vec<usize> {
    ones(mask).collect()
}

#[cfg(test)]
pub(crate) fn from_slice(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | (1u64 << v))
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Connected components of the subgraph induced by `alive`, as masks.
pub(crate) fn components(adj: &[u64], alive: u64) -> impl Iterator<Item = u64> + '_ {
    let mut rest = alive;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & rest & !comp;
            comp |= new;
            frontier |= new;
        }
        rest &= !comp;
        Some(comp)
    })
}

pub(crate) fn component_count(adj: &[u64], alive: u64) -> usize {
    components(adj, alive).count()
}

/// Next mask with the same popcount (Gosper's hack); `None` past `limit`.
pub(crate) fn next_combination(mask: u64, limit: u64) -> Option<u64> {
    if mask == 0 {
        return None;
    }
    let c = mask & mask.wrapping_neg();
    let r = mask.checked_add(c)?;
    let next = (((r ^ mask) >> 2) / c) | r;
    if next > limit {
        None
    } else {
        Some(next)
    }
}

/// All `k`-subsets of `0..n` as masks, in increasing numeric order.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = full(n);
    let mut cur = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(full(k))
    };
    std::iter::from_fn(move || {
        let out = cur?;
        cur = if out == 0 { None } else { next_combination(out, limit) };
        Some(out)
    })
}

/// All submasks of `mask`, including `mask` itself and 0.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(mask);
    std::iter::from_fn(move || {
        let out = cur?;
        cur = if out == 0 { None } else { Some((out - 1) & mask) };
        Some(out)
    })
}

/// Lexicographic comparison of the sorted vertex lists of two masks.
pub(crate) fn lex_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    ones(a).cmp(ones(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 0).count(), 1);
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(combinations(5, 5).count(), 1);
        assert_eq!(combinations(3, 4).count(), 0);
        assert!(combinations(6, 3).all(|m| m.count_ones() == 3 && m < 64));
    }

    #[test]
    fn submask_count() {
        assert_eq!(submasks(0b1011).count(), 8);
        assert_eq!(submasks(0).count(), 1);
    }

    #[test]
    fn component_masks() {
        // path 0-1-2 plus isolated 3
        let adj = [0b010, 0b101, 0b010, 0];
        assert_eq!(component_count(&adj, 0b1111), 2);
        assert_eq!(component_count(&adj, 0b1101), 3);
    }

    #[test]
    fn lex_order_of_sets() {
        use std::cmp::Ordering::*;
        assert_eq!(lex_cmp(from_slice(&[0, 1, 5]), from_slice(&[0, 2])), Less);
        assert_eq!(lex_cmp(from_slice(&[0]), from_slice(&[0, 2])), Less);
        assert_eq!(lex_cmp(from_slice(&[3]), from_slice(&[0, 2])), Greater);
    }
}
