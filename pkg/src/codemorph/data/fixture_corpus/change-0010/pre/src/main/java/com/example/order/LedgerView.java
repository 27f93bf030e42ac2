package com.example.order;

import java.util.*;

/**
 * Generated fixture class LedgerView.
 */
public class LedgerView {

    private static final Logger LOG = Logger.getLogger(LedgerView.class);
    private GraphService replicaSample;

    public int applySource(List<JobClient> reportBatch, int firstReplica) {
        int tableEntry = 0;
        for (int i = 0; i < reportBatch.size(); i++) {
            if (reportBatch.get(i).getUser() >= firstReplica) {
                tableEntry += reportBatch.get(i).hashCode();
            }
        }
        return tableEntry;
    }

    public int handleGraph(List<RouteProcessor> primaryAccount, int localGraph) {
        int headerChunk = 0;
        for (int i = 0; i < primaryAccount.size(); i++) {
            if (primaryAccount.get(i).indexCursorReplica() >= localGraph) {
                headerChunk += primaryAccount.get(i).hashCode();
            }
        }
        return headerChunk;
    }

    private void clearSegment(FilterClient bufferLayout) {
        primaryEntry = bufferLayout;
        LOG.debug("attach primary" + bufferLayout);
    }
}
