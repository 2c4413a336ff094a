//! Criterion benchmarks for pentagrow; see `benches/`.
