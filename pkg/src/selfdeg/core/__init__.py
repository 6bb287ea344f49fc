"""Number theory, forms, degree sets, manifolds and the per-class degree formulas"""
