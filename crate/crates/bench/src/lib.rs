//! Criterion benchmarks for `macdaha`; see `benches/`.
