//! Murnaghan-Nakayama rule on beta-sets (abacus moves), independent of the
//! transition-matrix machinery.

use std::collections::HashMap;

use crate::partition::Partition;

/// `χ^λ(μ)`: the irreducible character `λ` on the class of cycle type `μ`.
pub fn murnaghan_nakayama(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut memo = HashMap::new();
    rec(beta, mu.parts(), &mut memo)
}

fn rec(beta: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta.clone(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * rec(next, rest, memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(murnaghan_nakayama(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(murnaghan_nakayama(&p("2,1"), &p("3")), -1);
        assert_eq!(murnaghan_nakayama(&p("2,1"), &p("2,1")), 0);
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert_eq!(murnaghan_nakayama(&Partition::row(n), &mu), 1);
                assert_eq!(murnaghan_nakayama(&Partition::column(n), &mu), mu.sign());
            }
        }
    }

    #[test]
    fn degrees_square_sum() {
        let n = 6;
        let total: i64 = partitions_of(n)
            .iter()
            .map(|l| murnaghan_nakayama(l, &Partition::column(n)).pow(2))
            .sum();
        assert_eq!(total, 720);
    }
}
