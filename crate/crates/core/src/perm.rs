//! Small permutation helpers shared by the jellyfish calculus and the
//! signed-index matrices.

/// Sign of the permutation that sorts `seq` ascending (entries distinct).
pub fn sort_sign<T: Ord>(seq: &[T]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of `seq` viewed as a permutation, or 0 when entries repeat.
pub fn levi_civita(seq: &[usize]) -> i32 {
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return 0;
            }
        }
    }
    sort_sign(seq)
}

/// All permutations of `0..n` in lexicographic order, paired with their sign.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push((current.clone(), sort_sign(&current)));
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(sort_sign(&[1, 2, 3]), 1);
        assert_eq!(sort_sign(&[2, 1, 3]), -1);
        assert_eq!(sort_sign(&[3, 1, 2]), 1);
        assert_eq!(levi_civita(&[0, 0]), 0);
        assert_eq!(levi_civita(&[1, 0]), -1);
    }

    #[test]
    fn enumerates_symmetric_group() {
        let all = signed_permutations(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().map(|(_, s)| s).sum::<i32>(), 0);
        assert_eq!(signed_permutations(0).len(), 1);
    }
}
