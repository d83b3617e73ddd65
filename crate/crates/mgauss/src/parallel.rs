//! Homomorphism counting split across threads.

use std::thread;

use mgauss_core::presentations::{hom_count_part, FiniteGroup, Presentation, DEFAULT_SEARCH_LIMIT};

/// `hom_count` with the search split into `jobs` interleaved parts. Each part
/// gets the full node budget.
pub fn hom_count(p: &Presentation, g: &FiniteGroup, jobs: usize) -> mgauss_core::Result<u64> {
    let jobs = jobs.max(1);
    if jobs == 1 {
        return hom_count_part(p, g, 0, 1, DEFAULT_SEARCH_LIMIT);
    }
    let parts: Vec<mgauss_core::Result<u64>> = thread::scope(|s| {
        let handles: Vec<_> =
            (0..jobs).map(|part| s.spawn(move || hom_count_part(p, g, part, jobs, DEFAULT_SEARCH_LIMIT))).collect();
        handles.into_iter().map(|h| h.join().expect("hom count worker panicked")).collect()
    });
    let mut total = 0u64;
    for c in parts {
        total += c?;
    }
    Ok(total)
}

/// Available parallelism, or 1.
pub fn default_jobs() -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mgauss_core::presentations::hom_count as serial;
    use mgauss_core::words::Word;

    #[test]
    fn matches_serial_count() {
        let trefoil = Presentation::with_default_names(
            2,
            0,
            vec![Word::x(1)
                .mul(&Word::x(2))
                .mul(&Word::x(1))
                .mul(&Word::x(2).mul(&Word::x(1)).mul(&Word::x(2)).inverse())],
        )
        .unwrap();
        let free = Presentation::with_default_names(2, 1, vec![]).unwrap();
        for g in [FiniteGroup::symmetric(3), FiniteGroup::symmetric(4)] {
            for p in [&trefoil, &free] {
                let want = serial(p, &g).unwrap();
                for jobs in 1..=5 {
                    assert_eq!(hom_count(p, &g, jobs).unwrap(), want);
                }
            }
        }
    }
}
