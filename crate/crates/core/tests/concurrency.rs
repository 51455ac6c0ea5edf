use std::thread;

use hooklen::identities::{q_direct, q_recursive, q_term};
use hooklen::trees::enumerate_ordered;
use hooklen::{FamilyParams, RatFunc};

#[test]
fn partitioned_sums_match_the_whole() {
    let fam: FamilyParams = "-1/2,-3".parse().unwrap();
    let n = 6;
    let trees = enumerate_ordered(n).unwrap();
    // one worker per root degree, combined afterwards
    let partial: Vec<RatFunc> = thread::scope(|scope| {
        let handles: Vec<_> = (1..n)
            .map(|d| {
                let trees = &trees;
                let fam = &fam;
                scope.spawn(move || {
                    trees
                        .iter()
                        .filter(|t| t.degree() == d)
                        .map(|t| q_term(t, fam))
                        .sum::<RatFunc>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let combined: RatFunc = partial.into_iter().rev().sum();
    assert_eq!(combined, q_direct(n, &fam).unwrap());
}

#[test]
fn concurrent_evaluations_agree() {
    let fam = FamilyParams::recip(3).unwrap();
    let expected = q_recursive(5, &fam).unwrap();
    let results: Vec<RatFunc> = thread::scope(|scope| {
        let handles: Vec<_> = (0..4)
            .map(|_| scope.spawn(|| q_recursive(5, &fam).unwrap()))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(results.iter().all(|r| *r == expected));
}
