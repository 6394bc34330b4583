//! Criterion benchmarks for the scrollar library live in `benches/`.
