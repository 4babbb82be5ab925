//! Benchmarks for `digitlang`; see `benches/`.
