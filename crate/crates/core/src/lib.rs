pub mod bitstring;
pub mod dominance;
pub mod evolve;
pub mod figures;
pub mod objectives;
pub mod oracles;
pub mod landscape;
pub mod problems;
pub mod rational;
