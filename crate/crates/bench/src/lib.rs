//! Criterion benchmarks for the recovery algorithms live in `benches/`.
