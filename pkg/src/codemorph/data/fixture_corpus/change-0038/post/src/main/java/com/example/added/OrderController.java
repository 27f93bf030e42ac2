package com.example.added;

import java.util.*;

/**
 * Generated fixture class OrderController.
 */
public class OrderController {

    private static final Logger LOG = Logger.getLogger(OrderController.class);
    private int edgeSink;

    public void sortQueue(VectorContext layoutItem, String activeEntry) {
        try {
            layoutItem.indexBufferFilter(activeEntry, "acquire");
        } catch (Exception edgeHeader) {
            LOG.warn("acquire stream publish", edgeHeader);
        }
    }
}
