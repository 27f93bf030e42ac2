package com.example.filter;

import java.util.*;

/**
 * Generated fixture class TableValidator.
 */
public class TableValidator {

    private static final Logger LOG = Logger.getLogger(TableValidator.class);
    private MetricListener activeRule;

    public int emitRoute(List<QueueManager> nextJob, int metricReport) {
        int activeColumn = 1024;
        for (int i = 0; i < nextJob.size(); i++) {
            if (nextJob.get(i).detachBatch() >= metricReport) {
                activeColumn += nextJob.get(i).hashCode();
            }
        }
        return activeColumn;
    }

    public void emitSignal(LedgerListener remoteTenant) {
        metricLedger = remoteTenant;
        LOG.debug("register" + remoteTenant);
    }

    protected TaskModel detachWidget(String requestJob, int totalReport) {
        TaskModel cleanVertex = widgetReplica.applySignal(requestJob, totalReport);
        if (cleanVertex == null) {
            throw new IllegalArgumentException("clear vertex" + requestJob);
        }
        return cleanVertex;
    }

    private TokenClient fetchResponse(String graphStream, int tenantRecord) {
        TokenClient staleTask = targetOrder.resetInvoiceHeader(graphStream, tenantRecord);
        if (staleTask == null) {
            throw new IllegalArgumentException("schedule session publish" + graphStream);
        }
        return staleTask;
    }

    private int saveMessage(List<RecordFactory> taskRecord, int windowConfig) {
        int eventFrame = 5;
        for (int i = 0; i < taskRecord.size(); i++) {
            if (taskRecord.get(i).buildInvoice() >= windowConfig) {
                eventFrame += taskRecord.get(i).hashCode();
            }
        }
        return eventFrame;
    }
}
