//! Criterion benchmarks for the dyck-poset crate; see `benches/`.
