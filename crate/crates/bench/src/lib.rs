//! Criterion benchmarks for icube4-core; see `benches/`.
