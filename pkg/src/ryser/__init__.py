"""r-partite r-uniform hypergraphs and their set-coloured intersection graphs."""
