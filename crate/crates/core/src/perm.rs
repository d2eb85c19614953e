//! Small helpers for permutations given as images of `0..n`.

/// Sign of the permutation `i -> perm[i]`, computed from the inversion count.
pub fn sign(perm: &[usize]) -> i8 {
    if inversions(perm).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[j] < perm[i] {
                count += 1;
            }
        }
    }
    count
}

/// Permutation sending rank positions of `from` onto ranks of `to` elements,
/// where `pairs[t] = (a, b)` pairs an element of one ordered set with one of the other.
pub fn rank_permutation<A: Ord + Copy, B: Ord + Copy>(pairs: &[(A, B)]) -> Vec<usize> {
    let mut left: Vec<A> = pairs.iter().map(|p| p.0).collect();
    let mut right: Vec<B> = pairs.iter().map(|p| p.1).collect();
    left.sort();
    right.sort();
    let mut perm = vec![0; pairs.len()];
    for &(a, b) in pairs {
        let i = left.binary_search(&a).expect("left key present");
        let j = right.binary_search(&b).expect("right key present");
        perm[i] = j;
    }
    perm
}

/// Renders a permutation of `0..n` in 1-based one-line notation, e.g. `(1 3 2 4)`.
pub fn one_line(perm: &[usize]) -> String {
    let body: Vec<String> = perm.iter().map(|p| (p + 1).to_string()).collect();
    format!("({})", body.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(sign(&[0, 1, 2, 3]), 1);
        assert_eq!(sign(&[0, 2, 1, 3]), -1);
        assert_eq!(sign(&[0, 2, 3, 1]), 1);
        assert_eq!(sign(&[]), 1);
    }

    #[test]
    fn rank_perm_matches_order() {
        let perm = rank_permutation(&[(3, 10), (1, 30), (2, 20)]);
        assert_eq!(perm, vec![2, 1, 0]);
        assert_eq!(one_line(&perm), "(3 2 1)");
    }
}
