//! Benchmark helpers; the interesting parts live under benches/.
