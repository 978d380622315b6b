"""Set-colourings of complete and complete bipartite graphs."""
