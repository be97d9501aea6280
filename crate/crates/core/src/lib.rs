//! Rational Khovanov homology of oriented link diagrams, with the extra
//! structure coming from an admissible cut: surgeries indexed by non-crossing
//! partitions, bigraded decompositions, the associated double complex and its
//! spectral sequence, and the Jones polynomial splitting identity.
//!
//! All arithmetic is exact (arbitrary-precision rationals, Laurent
//! polynomials, rational functions); there is no floating point in the crate.
//! Every value is immutable after construction and the operations are pure,
//! so independent computations can run on separate threads freely.

pub mod catalog;
pub mod dcomplex;
pub mod diagram;
pub mod exact;
pub mod format;
pub mod khovanov;
pub mod ncpart;
pub mod selftest;
pub mod splitting;
pub mod surgery;

#[cfg(test)]
mod thread_safety {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::exact::Rat>();
        assert_send_sync::<crate::exact::Laurent>();
        assert_send_sync::<crate::exact::RatFunc>();
        assert_send_sync::<crate::exact::QMatrix>();
        assert_send_sync::<crate::ncpart::SetPartition>();
        assert_send_sync::<crate::diagram::OrientedDiagram>();
        assert_send_sync::<crate::diagram::CutPresentation>();
        assert_send_sync::<crate::khovanov::KhComplex>();
        assert_send_sync::<crate::khovanov::BigradedDims>();
        assert_send_sync::<crate::surgery::CutDiagram>();
        assert_send_sync::<crate::splitting::TwoVarPoly>();
        assert_send_sync::<crate::splitting::SplittingMatrix>();
    }

    #[test]
    fn parallel_rank_computations_match_sequential() {
        // the concurrency contract: independent exact computations give
        // bit-identical results regardless of scheduling
        let complex = crate::khovanov::khovanov_complex(
            &crate::catalog::solomon(),
            &crate::khovanov::MinEdgeOrder,
        );
        let sequential: Vec<usize> = (0..=4).map(|d| complex.diff(d).rank()).collect();
        let chain = std::sync::Arc::new(complex.as_chain());
        let handles: Vec<_> = (0..=4)
            .map(|d| {
                let chain = std::sync::Arc::clone(&chain);
                std::thread::spawn(move || chain.diff(d).rank())
            })
            .collect();
        let parallel: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(sequential, parallel);
    }
}
