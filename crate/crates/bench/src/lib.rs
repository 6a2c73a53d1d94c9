//! Criterion benchmarks for `satblow`; see `benches/`.
