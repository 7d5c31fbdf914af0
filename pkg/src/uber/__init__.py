"""Uberalgebras: the braiding Ψ, S_q(V⊗V), cross products and the named presentations built on them."""
