//! Criterion benchmarks for `flowroots`; see `benches/`.
