pub mod definition;
pub mod input;
pub mod render;
