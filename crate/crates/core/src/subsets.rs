use itertools::Itertools;

/// Subsets of `pool` with at most `max` elements, by increasing size and
/// lexicographically (in pool order) within one size.
pub(crate) fn bounded_subsets(
    pool: Vec<usize>,
    max: usize,
) -> impl Iterator<Item = Vec<usize>> + Clone + Send {
    let top = max.min(pool.len());
    (0..=top).flat_map(move |r| pool.clone().into_iter().combinations(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_bound() {
        let all: Vec<_> = bounded_subsets(vec![3, 5, 9], 2).collect();
        assert_eq!(
            all,
            vec![
                vec![],
                vec![3],
                vec![5],
                vec![9],
                vec![3, 5],
                vec![3, 9],
                vec![5, 9]
            ]
        );
        assert_eq!(bounded_subsets(vec![], 4).count(), 1);
    }
}
