pub mod class;
pub mod clips;
pub mod concrete;
pub mod piezo;
