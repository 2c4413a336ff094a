pub mod bigfloat;
