//! Criterion benchmarks for qsdl-core live under `benches/`.
